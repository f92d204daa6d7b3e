#pragma once

#include "mhk/mha.hpp"

namespace mhk {

using DVec = std::vector<Scalar>;

/// Dense matrix realization of K(G) or C[G] for a finite group, built by
/// direct structure-constant enumeration, independent of the lazy machinery.
struct DenseOracle {
    GroupPtr g;
    bool function_flavor = true;  // K(G) when true, C[G] otherwise
    int dim = 0;
    std::vector<GroupKey> basis;
    std::map<GroupKey, int> index;
    // mult[i][j] = coefficient vector of e_i e_j
    std::vector<std::vector<DVec>> mult;
    // delta[i] = coefficient vector of Delta(e_i) in the dim^2 tensor basis
    std::vector<DVec> delta;
    DVec eps;
    std::vector<DVec> antip;  // antip[j] = coefficient vector of S(e_j)
};

DenseOracle build_dense_oracle(const GroupPtr& g, bool function_flavor);

DVec dense_from_elem(const DenseOracle& o, const Elem& a);
DVec dense_mult(const DenseOracle& o, const DVec& a, const DVec& b);
/// (e_m (x) 1) Delta(e_n) resp. Delta(e_n)(1 (x) e_m) in the dim^2 basis.
DVec dense_delta_leg1(const DenseOracle& o, int m, int n);
DVec dense_delta_leg2(const DenseOracle& o, int n, int m);

struct OracleReport {
    bool ok = true;
    std::string witness;
    int checks = 0;
};

/// Lazy-vs-dense differential test for one flavor: multiplication table,
/// counit, antipode, both Delta legs, and the covered counit slice.
OracleReport dense_oracle_compare(const MhaPtr& H, const DenseOracle& o);
/// Smash products in C[G]#K(G) against the directly enumerated dense table.
OracleReport oracle_compare_smash(const GroupPtr& g);
/// Cotwist of the cyclic-shift coaction against dense permutation matrices.
OracleReport oracle_compare_cotwist(const GroupPtr& g);

}  // namespace mhk
