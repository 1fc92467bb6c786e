// Generated by scripts/gen_bessel_oracle.py -- do not edit by hand.
#pragma once

namespace mhelm::detail {

// e^x sqrt(x) K0(x) and ... K1(x) as Chebyshev series in u = 1/x on [1/30, 1/2]
inline constexpr double kChebULo = 0.03333333333333333333333;
inline constexpr double kChebUHi = 0.5;
inline constexpr double kK0MidCheb[25] = {
    1.217845042104215075069,
    -0.02891595256567864958654,
    0.001317189518856780637187,
    -0.00009764729425218391796773,
    0.000009541869313654220432696,
    -0.000001121764902736840302897,
    1.509854280773845392159e-7,
    -2.256680415377246751294e-8,
    3.669757600085229024348e-9,
    -6.39958406632202582219e-10,
    1.18403010504589259486e-10,
    -2.305220297914737186401e-11,
    4.69250768629647633484e-12,
    -9.935618986461878795381e-13,
    2.178941841384993834164e-13,
    -4.932097335019782759433e-14,
    1.148865079843301475265e-14,
    -2.747038844386095996254e-15,
    6.727893234384361357883e-16,
    -1.684599058949870979494e-16,
    4.305308565561924547356e-17,
    -1.121436135006687434459e-17,
    2.973384652417052606796e-18,
    -8.015639939688242745018e-19,
    2.194783844163284904768e-19};
inline constexpr double kK1MidCheb[25] = {
    1.367616729227503651868,
    0.09621670709590067732647,
    -0.002413757289630205882325,
    0.0001493070782912765887703,
    -0.00001332731653769765033282,
    0.000001482832619640407009827,
    -1.922633964786846547279e-7,
    2.796563413746646119943e-8,
    -4.454242777644355360759e-9,
    7.640976351957110459829e-10,
    -1.394922515706513611792e-10,
    2.685764268862028055273e-11,
    -5.415894860035352319718e-12,
    1.137487890975433259081e-12,
    -2.477092918587886526021e-13,
    5.572416484888682253588e-14,
    -1.290923100188312235935e-14,
    3.071627713830803603893e-15,
    -7.489765878367824235746e-16,
    1.867893586077912333947e-16,
    -4.756435673837015246815e-17,
    1.234832435330007210768e-17,
    -3.264057498850519233501e-18,
    8.774468661469563358196e-19,
    -2.396298564240307648794e-19};

// Hankel P,Q as Chebyshev series in w = 5/x on [5/18, 1] (x in [5, 18])
inline constexpr double kPQULo = 0.2777777777777777777778;
inline constexpr double kPQUHi = 1.0;
inline constexpr double kP0MidCheb[17] = {
    0.9987207572737286487652,
    -0.001225770785804865150065,
    -0.0001588659199308754697861,
    0.00000376080194628947861035,
    1.199540507284477135173e-7,
    -1.629030602414264098632e-8,
    6.218880733407277354619e-10,
    3.464075537956580944066e-11,
    -7.623504935648415210642e-12,
    5.969668199720590690065e-13,
    -5.612283231782070593464e-15,
    -5.550433225523799625386e-15,
    9.230288454235077059841e-16,
    -8.055103444666352802345e-17,
    1.108922984606834793172e-18,
    1.026772962014694070506e-18,
    -2.197289034796049558268e-19};
inline constexpr double kQ0MidCheb[19] = {
    -0.01576386869356412118278,
    -0.008774287047938534257607,
    0.00006224496460188227835502,
    0.000004419594933682421789341,
    -2.474686037968779895584e-7,
    5.45847970294321549269e-10,
    9.522136298283666311045e-10,
    -8.301411221626675465974e-11,
    1.919910146828843558152e-12,
    4.467682751815900896492e-13,
    -7.5524197640980712181e-14,
    5.973454386423429134926e-15,
    -2.52163866275889151178e-17,
    -7.385184090388820689307e-17,
    1.340261389441743817732e-17,
    -1.371944497555095671742e-18,
    4.977096818823166069561e-20,
    1.365955806925425047971e-20,
    -3.835053856483383006084e-21};
inline constexpr double kP1MidCheb[17] = {
    1.002151237833253835406,
    0.002069289841932322715062,
    0.0002736078809420446154156,
    -0.000004974508255982344492267,
    -1.739781057597625951655e-7,
    2.02578851948140132693e-8,
    -6.901344620505422355056e-10,
    -4.533890990856876530867e-11,
    8.897459989927135426791e-12,
    -6.568101685432171542436e-13,
    2.660876621529008573278e-15,
    6.470919956365268894735e-15,
    -1.023388921951863231552e-15,
    8.545583198395392182993e-17,
    -6.537318865496239144353e-19,
    -1.173974801447527381854e-18,
    2.402918729644103585053e-19};
inline constexpr double kQ1MidCheb[18] = {
    0.04762205350446518784942,
    0.02672412941317852948731,
    -0.00008890883188909131001595,
    -0.000006567138368801570098996,
    3.142168853898617782947e-7,
    3.749871906238022971181e-10,
    -1.181423960535446414585e-9,
    9.550628953735523954137e-11,
    -1.80914822551010012932e-12,
    -5.387352734686028229711e-13,
    8.530004734162592661162e-14,
    -6.40736891431010600922e-15,
    -1.336780175662573923357e-17,
    8.475112346435975731728e-17,
    -1.471501602139788239647e-17,
    1.452799122771520381794e-18,
    -4.534241879543340517781e-20,
    -1.580310305070051385134e-20};

} // namespace mhelm::detail
