#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmod/fusion.hpp"
#include "wmod/rational.hpp"

namespace wmod {

// Loaders for the bundled reference JSON under data/ (path baked in at
// configure time, overridable with WMOD_DATA_DIR in the environment).

std::string data_dir();

struct DenominatorRow {
    char family = 0;
    int min_rank = 0;
    int rank = 0;  // 0 = parametric in n
    std::vector<long> h_dual;               // c0 + c1*n
    std::string orbit;
    std::vector<std::vector<long>> denominators;  // each c0 + c1*n
    bool simply_laced = false;
};
const std::vector<DenominatorRow>& denominator_table();

struct TableIdent {
    std::string type;  // trivial | vir | extension | unknown
    long vp = 0, vq = 0;
    int r = 0, s = 0;
    long mult = 0;
};

struct TableRow {
    char family = 0;
    int rank = 0;   // concrete rank
    long p = 0, q = 0;
    Rat c;
    Rat ceff;
    Int count;
    TableIdent ident;
};

// Instantiates the parametric A/D rows for the requested ranks and returns
// them together with the concrete E rows.
std::vector<TableRow> walgebra_table(int a_min, int a_max, int d_min, int d_max);

struct E7Golden {
    std::vector<std::vector<long>> weights;  // 13 x 8 affine labels [a0..a7]
    std::vector<int> sigma;                  // affine node permutation
    int simple_current = 12;
    Rat simple_current_weight;
    std::vector<std::vector<std::vector<long>>> F;  // F[0..12], each 13x13
    FusionRing ring() const;                        // validated
};
const E7Golden& e7_golden();

struct E6Golden {
    std::vector<Rat> conformal_weights;  // 7 entries
    std::vector<std::map<long, long>> qdims;  // exponent -> coeff, order 11
    std::vector<int> dual;
    long qdim_order = 11;
    FusionRing ring() const;  // generated from the printed rule families, validated
};
const E6Golden& e6_golden();

}  // namespace wmod
