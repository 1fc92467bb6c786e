// Generated by scripts/gen_alpert_rules.py -- do not edit by hand.
// Correction nodes/weights for hybrid Gauss-trapezoidal quadrature of
// periodic integrands with logarithmic singularities.
#pragma once

namespace mhelm::detail {

// order 6 rule: l = 5 correction nodes, trapezoid offset a = 3
inline constexpr int kAlpert6A = 3;
inline constexpr int kAlpert6L = 5;
inline constexpr double kAlpert6Nodes[5] = {
    0.004004884194926569617659,
    0.07745655373336686132424,
    0.397284999352324859383,
    1.075673352915103744318,
    2.003796927111871943975};
inline constexpr double kAlpert6Weights[5] = {
    0.01671879691147101715107,
    0.163695837144735970111,
    0.4981856569770636544361,
    0.8372266245578912202374,
    0.9841730844088381380645};

// order 10 rule: l = 10 correction nodes, trapezoid offset a = 7
inline constexpr int kAlpert10A = 7;
inline constexpr int kAlpert10L = 10;
inline constexpr double kAlpert10Nodes[10] = {
    0.002637157025813715291912,
    0.03815855442472659596362,
    0.1780462938923900319656,
    0.5067493053443816877929,
    1.082696970185303361222,
    1.905454561255274772312,
    2.903921710254071346495,
    3.962195145042473847466,
    4.994694226107160562594,
    5.999857844135918706676};
inline constexpr double kAlpert10Weights[10] = {
    0.01001097314391441655798,
    0.07345258915379348156679,
    0.2210831813781983071491,
    0.4466436920781459573909,
    0.705411862349403239327,
    0.9278788657804097340199,
    1.048374956632902200849,
    1.052479779977263431684,
    1.013965180140640733483,
    1.000698919365328497972};

} // namespace mhelm::detail
