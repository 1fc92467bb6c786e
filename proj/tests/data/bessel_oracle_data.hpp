// Generated by scripts/gen_bessel_oracle.py -- do not edit by hand.
// Multiprecision (60-digit) series/asymptotic oracle values.
#pragma once

namespace mhelm::testdata {

struct KRow { double x, k0, k1, i0, i1; };
inline constexpr KRow kKITable[] = {
    {1.0e-8, 18.53661225961077840937, 99999999.99999990481694, 1.000000000000000025, 5.0000000000000000625e-9},
    {1.37151518834067498698e-8, 18.22069615402161899763, 72912061.67463929554757, 1.000000000000000047026, 6.857575941703375096144e-9},
    {1.881053911849161028701e-8, 17.90478004843245789374, 53161687.37646394933435, 1.000000000000000088459, 9.405269559245805559496e-9},
    {2.579894010188765532849e-8, 17.58886394284329948736, 38761282.28720628872309, 1.000000000000000166396, 1.289947005094382873746e-8},
    {3.538363819283024033605e-8, 17.27294783725414228648, 28261650.04712879165328, 1.000000000000000313, 1.76918190964151229368e-8},
    {4.852919720021786780723e-8, 16.95703173166498731241, 20606151.71263311206252, 1.000000000000000588771, 2.426459860010894104676e-8},
    {6.65585310380787023502e-8, 16.64111562607583440524, 15024370.04548453025716, 1.00000000000000110751, 3.327926551903936960365e-8},
    {9.128603623236917330744e-8, 16.32519952048669113366, 10954577.95378937993946, 1.000000000000002083285, 4.564301811618463419743e-8},
    {1.252001851761114876191e-7, 16.00928341489756186862, 7987208.633862892561578, 1.000000000000003918772, 6.260009258805586646727e-8},
    {1.717139555521019315056e-7, 15.69336730930845843976, 5823638.485203600416081, 1.000000000000007371421, 8.585697777605128219676e-8},
    {2.355082980897638555956e-7, 15.37745120371940060401, 4246134.884038821624429, 1.00000000000001386604, 1.177541490448827441897e-7},
    {3.230032078103743016683e-7, 15.06153509813043261571, 3095944.48543761478439, 1.000000000000026082768, 1.615016039051892570386e-7},
    {4.430038053946885983081e-7, 14.74561899254162434288, 2257316.952633322735425, 1.000000000000049063093, 2.215019026973497329383e-7},
    {6.07586447591532062745e-7, 14.42970288695311599917, 1645856.328694026113962, 1.000000000000092290323, 3.037932237957800499598e-7},
    {8.333140411017417493662e-7, 14.11378678136515595953, 1200027.781450562498859, 1.000000000000173603073, 4.166570205509070411526e-7},
    {0.000001142902864028584312612, 13.7978706757782046769, 874964.9961203103564687, 1.000000000000326556739, 5.714514320143854619641e-7},
    {0.000001567508636813260669208, 13.48195457019310834758, 637955.0175977460208012, 1.000000000000614270832, 7.837543184068710533127e-7},
    {0.000002149861903244578308756, 13.16603846461141915826, 465146.1558806243778976, 1.000000000001155476551, 0.000001074930951622910183132},
    {0.000002948568253134929805011, 12.85012235903599423629, 339147.6520439242232218, 1.000000000002173513686, 0.000001474284126569067090869},
    {0.000004044006143033696562556, 12.53420625347206348732, 247279.5452143522913769, 1.000000000004088496421, 0.000002022003071520981757439},
    {0.000005546415846913706971454, 12.21829014792922677486, 180296.6144994020831359, 1.000000000007690682187, 0.000002773207923467517416116},
    {0.000007606993574895557183164, 11.90237404242506260615, 131457.9787396349648252, 1.000000000014466587812, 0.000003803496787475290401716},
    {0.00001043310722557918462752, 11.58645793699175757751, 95848.72250622173335244, 1.000000000027212431595, 0.000005216553612860569867934},
    {0.00001430916502146869248153, 11.27054183168819474454, 69885.27962984787957942, 1.000000000051188050904, 0.000007154582510917460807641},
    {0.000019625237159417472548, 10.95462572662200857838, 50954.79813421059315401, 1.000000000096287483393, 0.000009812618580181152448267},
    {0.00002691631083892886824592, 10.63870962198979367561, 37152.19377385022577981, 1.000000000181121947303, 0.00001345815542068321778128},
    {0.00003691612912968975379295, 10.32279351815028347341, 27088.43034740325680774, 1.000000000340700147509, 0.00001845806456798920955637},
    {0.00005063103179611512086562, 10.00687741575748258555, 19750.73292125822001037, 1.000000000640875345287, 0.00002531551590616960542853},
    {0.00006944122910973153376159, 9.690961316002465566158, 14400.66640884128821603, 1.000000001205521075431, 0.00003472061457579398317759},
    {0.00009523970042104140697939, 9.37504522105209921841, 10499.82256131471170988, 1.000000002267650135358, 0.0000476198502645132833673},
    {0.00013062269566047406815, 9.059129134843907754242, 7655.63682018151936465, 1.000000004265572159951, 0.00006531134796953216754227},
    {0.0001791510110403421272742, 8.743213064524116686644, 5581.882267155959510082, 1.000000008023771205289, 0.00008957550587953774434282},
    {0.0002457083326484171766265, 8.427297023045215543764, 4069.864948165590786923, 1.000000015093146240167, 0.0001228541672513365364197},
    {0.0003369927101291671049292, 8.111381033849896186042, 2967.42178976186986017, 1.000000028391021871563, 0.0001684963574564753977642},
    {0.000462190620302240058565, 7.795465139301493349446, 2163.607546398845027872, 1.000000053405043086867, 0.0002310953163219474997164},
    {0.0006339014556531201742976, 7.479549415826673536407, 1577.529737259215707086, 1.000000100457766392727, 0.0003169507437466410408768},
    {0.0008694054743395171487897, 7.163634001053886647469, 1150.207967600216311375, 1.000000188966478629962, 0.0004347027782418806745113},
    {0.001192402812883176736802, 6.847719142330889969736, 838.6383909977420759333, 1.000000355456148630192, 0.000596201512403313100488},
    {0.001635398568489424121531, 6.531805283227142290268, 611.4659850443558883585, 1.000000668632231221551, 0.0008176995576147452751701},
    {0.002242973975673842786081, 6.215893217292643703277, 445.8291167237884231819, 1.000001257733459360701, 0.001121487693102701893438},
    {0.003076272874689543045393, 5.899984360438624182818, 325.0588480896000914236, 1.000002365865099215796, 0.001538138256856070269445},
    {0.004219154971117146921689, 5.584081231609614280803, 237.0014504772681517799, 1.000004450322118908805, 0.00210958217970650535692},
    {0.005786635124850228895176, 5.26818829734553351102, 172.7953127395050685079, 1.000008371304036663389, 0.002893329672837160976051},
    {0.007936457963117727000827, 4.952313448335864571412, 125.9791575324549375537, 1.000015746903240944496, 0.003968260225176769735715},
    {0.01088497263804325912692, 4.636470566051662609178, 91.8418214449956323856, 1.000029620876679294722, 0.00544256692443070637419},
    {0.01492890529774902493654, 4.32068395425094356003, 66.94816515719931294441, 1.000055718829477461856, 0.007464660603191087606588},
    {0.02047522036116235453059, 4.004995929578804869218, 48.79340536578578116478, 1.000104811408455438891, 0.01023814668506643971119},
    {0.0280820757099564100025, 3.689479699504429755291, 35.55108478319698469282, 1.000197160461361762307, 0.01404242200098849642231},
    {0.03851499335633803868051, 3.374260957269125215563, 25.88932079938168107147, 1.000370885562375597734, 0.01926106773155095428088},
    {0.05282389836705781097265, 3.059553573907498543379, 18.83684578845404206513, 1.000697712727425109229, 0.02642116262447846291478},
    {0.07244877891778396751146, 2.745717516815361046808, 13.68536400710118875793, 1.001312636925841253236, 0.0362481615950061420551},
    {0.0993646006624764015594, 2.433350618798488213816, 9.918405507418613189413, 1.002469854548449033008, 0.04974364174138838529367},
    {0.1362800589919925591745, 2.12342939818896047249, 7.159523261307596112446, 1.004648455910892824146, 0.06829834120316030836397},
    {0.1869101707754809726135, 1.817515693062321954229, 5.134621684676329325361, 1.008752941548035050603, 0.09386379137282243082968},
    {0.2563501380739215119399, 1.518040453313353992375, 3.644613787679358384372, 1.01649644838743751705, 0.1292308403174450372279},
    {0.3515881079016125002961, 1.228653868167164702805, 2.545614173080444582196, 1.03114312815904031281, 0.1785244108593727738539},
    {0.482208430027022614096, 0.9545765469213260911877, 1.734576951746523713057, 1.058981529359888556631, 0.2481802844497166388322},
    {0.6613561857279731162733, 0.7027832661943795646873, 1.138744752957170185298, 1.112373815415281037732, 0.3490900987777680136889},
    {0.9070600536289714753865, 0.4817033382989160803568, 0.7075512454961974673188, 1.216511391418212561812, 0.5017998995745378653673},
    {1.244046640289241567272, 0.3000080939483038578979, 0.405831573251476670785, 1.425986877540430412966, 0.7503727072819549339919},
    {1.706228862160883095497, 0.1641978094787744750977, 0.2075732497205073879159, 1.871439385111917803745, 1.203591525497148875518},
    {2.340118799238888731952, 0.07542452188906993115692, 0.09028101786286677754087, 2.915328002471869837023, 2.176082111763449340728},
    {3.209508475677678677577, 0.02729580979961736193176, 0.03128857608871498453165, 5.792416206028350039866, 4.775008861544318503828},
    {4.401889621500064157044, 0.00713415464023189491315, 0.007906360026259738114707, 16.03700046474343004392, 14.07046390246534874738},
    {6.037258473286523023853, 0.001194926982162724083621, 0.001290337898404643961594, 69.55995054219851049364, 63.5036759341849067247},
    {8.280191692050901554708, 0.0001088417781008073604571, 0.000115236077143053475703, 555.8355651999557126792, 521.1035854407339624141},
    {11.35640866802008454826, 0.000004303550971541163349573, 0.000004489180935608510146713, 10240.67340144271193371, 9778.848066182619612646},
    {15.5754869731932402221, 5.421391168964927167133e-8, 5.592797174380641536031e-8, 592438.0370428746408275, 573092.6120839771315014},
    {21.36201694953694402053, 1.423469690349664647324e-10, 1.45641457962712686186e-10, 164474629.1542071289637, 160577597.6125112796282},
    {29.29833069988085313742, 4.352239672762961556271e-14, 4.42590098170731730295e-14, 392172996986.2958961612, 385421073790.6580173515},
    {40.18310554791446829808, 6.972725831529770951764e-19, 7.058960885156342332842e-19, 17846685559344213.25313, 17623201144554225.60569},
    {55.11173957366113395512, 1.957659852761422502403e-25, 1.975341531716747913696e-25, 4.634538915819405724693e+22, 4.592297870282531764234e+22},
    {75.58658788115208114645, 2.144302367998139526126e-34, 2.158440472148725761853e-34, 3.08495435579463573148e+31, 3.064479191611289279872e+31},
    {103.6681533138472780724, 1.167371712110459498285e-46, 1.172988592822729078623e-46, 4.131621501200135043916e+43, 4.111645826260243343137e+43},
    {142.1824468171712193693, 1.871562748739008719088e-63, 1.878132810332011024062e-63, 1.878980675954278993462e+60, 1.872361335686078247206e+60},
    {195.0053853251913873932, 1.832298270193067472351e-86, 1.836990348778917428444e-86, 1.399357420946387979488e+83, 1.395764800436731402749e+83},
    {267.4528477817257639232, 5.381926534908764906794e-118, 5.391978614285702512109e-118, 3.473647713416455190462e+114, 3.467147676258193199522e+114},
    {366.8156428976034895074, 3.233542955782059715929e-161, 3.237947545945843629019e-161, 4.215449832501292673391e+157, 4.20969989955397393259e+157},
    {503.0932255550124290294, 1.805161919490429939104e-220, 1.806955092777050230449e-220, 5.505611800585182407886e+216, 5.500137315085903587605e+216},
    {689.9999999999998484466, 1.036010746355897451701e-301, 1.036761207169610675424e-301, 6.994501494916943135171e+297, 6.989431176499738530115e+297}};

struct JYRow { double x, j0, j1, y0, y1; };
inline constexpr JYRow kJYTable[] = {
    {0.001, 0.9999997500000156249996, 0.0004999999375000026041666, -4.47141661137592326898, -636.6221672311394280744},
    {0.001156887528316282078508, 0.9999996654028396953795, 0.0005784436673853178993127, -4.378639552207169545864, -550.2893755513194765479},
    {0.001338388753173756368011, 0.9999995521789364804344, 0.0006691942267472038800002, -4.285862367821088570799, -475.6644095745620623149},
    {0.001548365256585499119053, 0.9999994006413478574498, 0.0007741823962862096687377, -4.193085019400182321349, -411.1595617051715165489},
    {0.001791284454622003978129, 0.9999991978251615285555, 0.0008956418680801484645263, -4.10030745619440824244, -355.4024374724980314338},
    {0.002072314645219029527169, 0.9999989263782909686958, 0.001036156766388967236703, -4.00752961189037589974, -307.2067566932369208319},
    {0.002397434967801078523062, 0.9999985630769099784405, 0.001198716622668020619804, -3.914751399889670423842, -265.5471143527802992549},
    {0.002773562614198415042982, 0.9999980768385309184141, 0.001386779973596805881788, -3.821972707173769856044, -229.5371642219234475209},
    {0.003208699997370450229083, 0.9999974260627380086332, 0.001604347933936660790634, -3.729193386339660400239, -198.4107610463964193171},
    {0.003712105009066360970246, 0.9999965550720673021981, 0.001856049307548703992539, -3.636413245270656248702, -171.505660092400558579},
    {0.004294487988789272218729, 0.9999953893485430724114, 0.002147239044295908608191, -3.543632033753965628015, -148.2494272407735231863},
    {0.004968239594734387517554, 0.9999938291583521728783, 0.002484112132808300461752, -3.450849426161431726071, -128.1472598532146258817},
    {0.005747694424835352537323, 0.9999917410192524246692, 0.002873835344885109026237, -3.358064999061536945271, -110.7714592867604163989},
    {0.006649435996665045543225, 0.9999889462807778722521, 0.0033246996230659733106, -3.265278202315528321717, -95.75233107232398880215},
    {0.00769264957487914608658, 0.999985205840346632689, 0.003846296335833004403495, -3.172488321811638106339, -82.77031914722041315709},
    {0.008899530352885233411627, 0.9999801996878883632574, 0.004449721123000268492244, -3.079694431488240233672, -71.54920678639703074177},
    {0.01029575567312512730703, 0.9999734995293503734899, 0.005147809625819170077408, -2.986895331664650408012, -61.85023957115980181105},
    {0.01191103133283006756902, 0.999964532147643560669, 0.005955410051427688183493, -2.894089469907507403528, -53.46704535034344923583},
    {0.01377972359833557490636, 0.9999525303677402648831, 0.00688969826891792292814, -2.801274839676334720849, -46.22124310443004429333},
    {0.01594159037455999593938, 0.9999364674332041275395, 0.00797054198340059293586, -2.708448850773832949862, -39.95864727879755753372},
    {0.01844262708585534712838, 0.9999149691841627030842, 0.009220921492242758714538, -2.615608164129495674007, -34.54598681983667996425},
    {0.02133604526501410873279, 0.9998861965310630056853, 0.01066741559775886339389, -2.522748481620646447456, -29.86806909657294084358},
    {0.02468340467068649850059, 0.9998476881835316975697, 0.01234076242986239875623, -2.429864279433692641359, -25.82532835354450626814},
    {0.02855592301990109044719, 0.9997961502046287790809, 0.01427650620546126424472, -2.336948470845932268736, -22.33170651925594444754},
    {0.03303599120128339401839, 0.9997271744317594376766, 0.01651574228364002470903, -2.243991981234624408149, -19.31282126243575025582},
    {0.03821892620633118809608, 0.9996348617561268509765, 0.01910597419909545208343, -2.150983214595190022571, -16.70438229577902286414},
    {0.04421499907374489017073, 0.9995113181780565684561, 0.0221020975502816970784, -2.057907386929353521354, -14.45082220357330818067},
    {0.05115178099293145365321, 0.9993459807878015425772, 0.02556752647866192658189, -1.96474569769641977975, -12.50411262755046241582},
    {0.05917685748188824650212, 0.999124716480173223578, 0.02957547866412769936406, -1.87147430641256432802, -10.82274058104924275125},
    {0.068460968385746577752, 0.9988286171427212211577, 0.03421043373387959404585, -1.778063077990843641401, -9.370823058305347374261},
    {0.0792016405019255266416, 0.9984323897607134633234, 0.0395697768683907052848, -1.684474058491360857287, -8.117341034955411523005},
    {0.09162739011886740808259, 0.9979022064278841061444, 0.04576563281546289516504, -1.590659644165598487301, -7.035476479029458318671},
    {0.1060025848806882432914, 0.9971928351966661135686, 0.05292688334022975123917, -1.496560413549747978005, -6.102038161292013338219},
    {0.1226330684177563145933, 0.9962438150253681545613, 0.06120133999515909368266, -1.402102608858630889783, -5.296963914454798452974},
    {0.1418726674116596158692, 0.9949743631862631220298, 0.07075800880374836329298, -1.307195285227535148576, -4.602888580401598229578},
    {0.1641307195375130013451, 0.9932766073688932978642, 0.08178932603362871121545, -1.211727203939778710544, -4.004768235212190886578},
    {0.1898807824465263245162, 0.9910066133806199760904, 0.09451315248523599390931, -1.115563643132893530301, -3.489552420882380289587},
    {0.2196707090793235202973, 0.9879725300085752989727, 0.1091741691234345170111, -1.018543458442455711607, -3.045897064643154245046},
    {0.2541343036702639116297, 0.9839189959422053155154, 0.1260440916107554271102, -0.9204769792668715172119, -2.663911555753042687895},
    {0.2940048064334710696178, 0.9785067583675207087261, 0.1454197741196097149267, -0.821145721985673921775, -2.334934103860701185658},
    {0.3401304938279252934596, 0.971286264214633081804, 0.1676177437087204122564, -0.7203055093731615043384, -2.051330063171073896507},
    {0.3934927263095849296709, 0.9616638605342693296126, 0.192962910658294271939, -0.6176955043170733762777, -1.806308440229916337434},
    {0.4552268275507309693478, 0.9488592974557156032772, 0.2217680224878390944406, -0.5130570298157603859255, -1.593752429975367431922},
    {0.5266462393484280714557, 0.9318536907255822200042, 0.2542987253924149566864, -0.4061680261679011463812, -1.408060760384866273116},
    {0.6092704661368680494915, 0.9093283835861119236294, 0.2907167102430357745432, -0.2969017790744231152198, -1.243998254097921669953},
    {0.7048574036451903168414, 0.879597977095494294972, 0.3309902435579455465719, -0.1853222838948353476663, -1.096557001410969079223},
    {0.815440739518517013248, 0.8405464044568938452955, 0.3747575138453627347602, -0.07183322773292083135721, -0.9608349979999168671813},
    {0.943373221629978349677, 0.7895852862698026442648, 0.4211243148709092652147, 0.04259757806792976940469, -0.8319488092230102905462},
    {1.091376714651273826997, 0.7236718680392490588948, 0.4683755868879012904229, 0.156113427706273453359, -0.7050133998720120568631},
    {1.26260010987485645551, 0.6394534551270272248243, 0.5135848996390094749216, 0.2655224172354817458089, -0.5752490607684397538997},
    {1.460686320364988861245, 0.533650044393302774258, 0.5521269249857310554513, 0.3657294373897270096553, -0.4383153227714146521146},
    {1.689849786812458654847, 0.4038462337973778015417, 0.5771540477219793377148, 0.449105023787952444077, -0.2910236204479744477878},
    {1.954966143091261495747, 0.2499221893645885767529, 0.5792210043001659321508, 0.5049807455707351262307, -0.13262886821578250346},
    {2.261675949222864545365, 0.07635808368266111543428, 0.5464737586983025015906, 0.5197127093573239114967, 0.03310626914994853888482},
    {2.616504698748823530611, -0.1045375991486651212281, 0.4661919027856478406823, 0.4781662548036753556475, 0.1950686165297044649566},
    {3.027001653763464691782, -0.269070532588352743966, 0.3289219391944013759528, 0.3679865807861895805484, 0.3317895548668418110352},
    {3.501900461431712938689, -0.380388063326687816663, 0.1365805037156224805993, 0.1882422673997425929316, 0.4103242017105048713312},
    {4.051304969235382079114, -0.3932641202966616983368, -0.08535866232030720974743, -0.03719539240618440147129, 0.391504024243752991051},
    {4.686904192314192379979, -0.2729674573723280228033, -0.2763046167168488733588, -0.246159923164641174572, 0.2484338617874983532032},
    {5.42222100650159196601, -0.03354240862184912760159, -0.3447582742900762428015, -0.3403085715170511777005, 0.002540507188831577929126},
    {6.272899858196249987686, 0.2180790496443328429483, -0.2149869842699093950099, -0.2315573423178280864165, -0.2370952263784992350022},
    {7.257039612324215992544, 0.2915071410792963620838, 0.07056800670175207932707, 0.05045722307718013431914, -0.2887194428127204338917},
    {8.395578619995120731475, 0.07035414586541717179668, 0.2706203752565214733831, 0.2659827279567218573926, -0.05468952623848103764373},
    {9.712740198471177651303, -0.2232624743728466135667, 0.1136524066393144122336, 0.1249532348890422186118, 0.2299695934638835967115},
    {11.23654800138751575024, -0.1254665812737917137373, -0.2079058588770644786432, -0.2021359372871007919215, 0.1166121215242101648409},
    {12.99942224413247571609, 0.2068854402726466982868, -0.0704407210723119309134, -0.0783292299315552400891, -0.2100455243150283811252},
    {15.03886946955410124443, -0.02217370701088040030804, 0.2038672297266067114013, 0.2044913826694746963425, 0.02897723044651498809159},
    {17.39828052930365813583, -0.119219144092346889662, -0.153026540702147755228, -0.1495417247762702192809, 0.1149740373912444864881},
    {20.12785375849938436858, 0.1571697892207723202338, 0.08709436444203924664518, 0.08316690606736204409498, -0.1551533974374226156971},
    {23.28566298498196500515, -0.1447902672298690094374, -0.08293227982577190783708, -0.07980635900791815687162, 0.1431106990676796750559},
    {26.93889309590175205416, 0.0809565760540921289448, 0.1321919274832810938305, 0.130667387367046724378, -0.07854606720596314666898},
    {31.16526944929430209772, 0.07233839981948842461096, -0.1221103917254731854997, -0.123254817972389374057, -0.07432462603505807471814},
    {36.05471154250505956485, -0.1009107744263779784049, -0.08785030487737422613503, -0.08644285934893011767679, 0.09972192275710370193605},
    {41.71124612056524704609, -0.1231206454785646153257, -0.01161325778134676215386, -0.01013687311085045234248, 0.1230079882644832845589},
    {48.25522042741278889448, -0.1081530327606738000181, -0.03978754262616328428, -0.03866495301647671829581, 0.1077582478583022315261},
    {55.82586268862700328026, 0.006441077979745633616199, -0.1065379879577535711162, -0.1065913992411571204836, -0.007395937274127182733961},
    {64.5842443019699134654, 0.05652809189069318473689, 0.08205793303313582491913, 0.08161788357045395352497, -0.05589795165336096962883},
    {74.71670675868082134422, 0.009417953559080577091266, -0.09176255404754479233062, -0.09182352019177782157564, -0.01003261470992740988091},
    {86.43882620598279164709, -0.05798150966634452681373, -0.06360567248558146415356, -0.06326923501153313671318, 0.05761651478175112047987},
    {100.0, 0.01998585030422312242423, -0.07714535201411215803269, -0.07724431336508315225423, -0.0203723120027597933047}};

struct IRow { double x, i0, i1; };
inline constexpr IRow kITable[] = {
    {0.001, 1.000000250000015625, 0.0005000000625000026041667},
    {0.001252952961463651764, 1.000000392472819418856, 0.0006264766036693172074099},
    {0.001569891123640535222369, 1.000000616139629928324, 0.0007849458036382891819577},
    {0.001966999732540908495257, 1.000000967272220857801, 0.0009835003419264658372868},
    {0.002464558140085342248544, 1.000001518512282934778, 0.001232280005658004660656},
    {0.003087975420319279092143, 1.000002383899469866861, 0.001543989550515015809695},
    {0.003869087947816005554708, 1.00000374246388848766, 0.001934547593887355329301},
    {0.004847785202379387095041, 1.000005875263971764106, 0.002423899721690642915112},
    {0.006074046825860921466676, 1.000009223532478999344, 0.003037037418961739657231},
    {0.007610494958531335451291, 1.000014479960795478713, 0.003805275029149582839935},
    {0.009535592196496028377419, 1.000022732008819383207, 0.004767850288936836701426},
    {0.01194764848190939283148, 1.000035686894446008156, 0.005973930834255263565895},
    {0.01496984154793508462993, 1.000056024823670691657, 0.007485130443671938987989},
    {0.01875650730012688116337, 1.00008795357541663867, 0.009378666072510514924076},
    {0.02350102136840857912553, 1.000138079267554700134, 0.01175132192582430868716},
    {0.02944567432096809108641, 1.000216773680771056329, 0.01472443289346086719456},
    {0.03689404484275117295433, 1.000340321587078921646, 0.01845016129233802510849},
    {0.04622650274609785051181, 1.0005342937416592265, 0.02311942573095458105478},
    {0.05791963351383093253631, 1.000838846845236897041, 0.02897196233353282864372},
    {0.07257057633804384162371, 1.001317055574376212527, 0.03630918041812534886248},
    {0.0909275185378760440439, 1.002068021726287663616, 0.04551076119400241295838},
    {0.113927903630572884402, 1.003247525086385427509, 0.05705642274171074736387},
    {0.142746304247271819125, 1.005100618049343465872, 0.07155509847946758440228},
    {0.1788544046446106777134, 1.008013227629709432015, 0.08978526396163154940222},
    {0.2240961559702834906962, 1.012594232366708343167, 0.1127529203226063587597},
    {0.2807819422755871056985, 1.019806955049323497515, 0.1417790500900747373295},
    {0.3518065660997129849339, 1.031182140769212800044, 0.1786387501322392446185},
    {0.4407970788569933406822, 1.049168604889400324321, 0.2257950390386900419273},
    {0.5522980053583966449433, 1.077724480087398124196, 0.2868130038621043754326},
    {0.6920034214242708869325, 1.123348254592327305407, 0.3671302806845617010342},
    {0.8670477362165196520859, 1.196960170500090958182, 0.4755590166943479505818},
    {1.086370028822843447565, 1.317540377137531773881, 0.6273572620721601855371},
    {1.361170544858934422287, 1.519675967803881547239, 0.8508566533636337667974},
    {1.705482665238094335939, 1.870541593382877402129, 1.202721698092948689218},
    {2.136889556134992114422, 2.511784366827375133143, 1.806024655457424122925},
    {2.677422097680086697653, 3.77424341437268115366, 2.955205196156522742141},
    {3.354683946376487337124, 6.533049189708974495693, 5.442927299620295975147},
    {4.20326118538699015923, 13.48068707940183061776, 11.74042172767156839265},
    {5.266488550035848714044, 34.58950750737688295778, 31.10346709733774902256},
    {6.598662425281830008722, 116.3938860279426254683, 107.1706150791447060429},
    {8.267813627455791642452, 549.4229238365762073478, 515.0382163761495379108},
    {10.35918156935027140781, 3960.102545933870653123, 3763.819098599540834371},
    {12.97956722565710221479, 48483.3678500917678717, 46576.54109745103614471},
    {16.26278719390362063085, 1152389.638897697846506, 1116377.522770057285085},
    {20.37650737625469258806, 62875737.84861981628663, 61312951.26895619944989},
    {25.53080526136426175752, 9714835099.257330590885, 9522637118.339961027726},
    {31.98889806077813356445, 5530148861416.439516618, 5443012538806.870630661},
    {40.08058455921082942794, 16128409554601786.00442, 15925922205139001.56718},
    {50.21908712065762499142, 364283981371120415580.4, 360638607072451705462.5},
    {62.92215392982910383022, 1.069355851587305424864e+26, 1.060824088383234590139e+26},
    {78.83849910805112953232, 7.804750505042481217327e+32, 7.755093167066325668985e+32},
    {98.78093093478213086951, 3.1925603084042449406e+41, 3.176359188935017978183e+41},
    {123.7678599508717216404, 2.026493166700264505789e+52, 2.018289825381667216933e+52},
    {155.0753066594632247532, 7.150557559581932646964e+65, 7.127465036455654215238e+65},
    {194.3020647288584056108, 6.938506650863095945696e+82, 6.920628610157300368952e+82},
    {243.4513474205252965202, 1.372474295459347476496e+104, 1.369652603302986642762e+104},
    {305.0330867228635291302, 6.809280357319260174117e+130, 6.798109635492884950904e+130},
    {382.1921093538107739602, 1.967141288275486648472e+164, 1.964566102433446723625e+164},
    {478.8687352628970515561, 1.702019721887791383977e+206, 1.70024166662871225025e+206},
    {599.9999999999996944827, 6.146305403934968566455e+258, 6.141181345065017261444e+258}};

inline constexpr double kFirstJ0Root = 2.404825557695772768622;
inline constexpr double kLambdaAnnulus = 10.24421384819211034165;
inline constexpr double kK0At1 = 0.4210244382407083333356;
inline constexpr double kK1At1 = 0.6019072301972345747375;
inline constexpr double kY0At1 = 0.08825696421567695798293;
inline constexpr double kI0At1 = 1.266065877752008335598;

} // namespace mhelm::testdata
