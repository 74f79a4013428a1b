#pragma once

// Root data of rank <= 3 with standard and semi-standard parabolic
// bookkeeping: chambers, relative bases, projections, Weyl groups and
// orthogonal families. The same face machinery also drives the twisted
// (restricted) systems.

#include "conelab/chambers.hpp"
#include "conelab/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

struct DatumConfig {
  std::string name;
  std::string type;  // A1 | A1xA1 | A2 | B2 | G2
  int central_rank = 0;
  std::vector<int> theta_perm;   // permutation of the simple roots; empty = id
  MatQ theta_central;            // finite-order integer matrix on the central block
  std::optional<MatQ> gram_override;
  std::optional<MatQ> b0_coords;  // columns: basis of B0 in A0 coordinates
  bool has_theta = false;
};

DatumConfig config_from_json(const std::string& text);
std::string config_to_json(const DatumConfig& c);
DatumConfig builtin_config(const std::string& type);

// point serialization: arrays of "num/den" strings
std::string point_to_json(const VecQ& x);
VecQ point_from_json(const std::string& text);

struct SystemRoot {
  VecQ covector;  // on the ambient space, zero on the orthocomplement of span
  VecQ coroot;    // in the system space
};

struct Parabolic {
  int id = -1;
  MatQ a_basis;     // basis of a_P
  MatQ proj;        // gram-orthogonal projector onto a_P
  VecQ interior;    // witness inside the open chamber
  std::vector<int> sign;  // sign per system root on the chamber
  std::vector<VecQ> delta;        // facet covectors, composed with proj
  std::vector<VecQ> delta_check;  // matching coroots projected into a_P
  std::vector<VecQ> delta_hat;    // dual basis of delta_check (ambient covectors)
  int levi = -1;    // index into the Levi table
  bool standard = false;
  int dim = 0;      // dim a_P

  int nfacets() const { return static_cast<int>(delta.size()); }
};

struct RelativeBases {
  std::vector<VecQ> delta, delta_check, delta_hat;
  MatQ a_rel;  // basis of a_P^Q
};

class ParabolicSystem {
 public:
  int ambient = 0;
  MatQ space;   // basis of the total space V (identity for an untwisted datum)
  MatQ gram;    // ambient gram matrix
  std::vector<SystemRoot> roots;   // all roots, both signs
  Lattice A0;   // lattice of V
  Lattice B0;   // finite-index sublattice
  MatQ center;  // basis of the common kernel of the roots inside V ("a_G")
  std::vector<Parabolic> par;
  std::vector<MatQ> levi_spaces;   // dedup'd a_P spans
  int G_id = -1;                   // the face with a_P = center
  int base_id = -1;                // standard minimal parabolic P0
  std::vector<int> standard_ids;

  const Parabolic& p(int id) const { return par.at(id); }
  int npar() const { return static_cast<int>(par.size()); }

  bool contained(int p_id, int q_id) const;         // P subset Q
  std::vector<int> pset(int levi) const;            // P(M)
  std::vector<int> pset_in(int levi, int q_id) const;
  std::vector<int> fset(int levi) const;            // F(M)
  std::vector<int> fset_in(int levi, int q_id) const;
  std::vector<int> between(int p_id, int r_id) const;  // {Q : P<=Q<=R}
  int levi_of_space(const MatQ& a) const;

  RelativeBases relative_bases(int p_id, int q_id) const;

  // gram-orthogonal projections
  VecQ project_onto(int p_id, const VecQ& x) const { return p(p_id).proj * x; }
  std::pair<VecQ, VecQ> project(const VecQ& x, int p_id, int q_id) const;

  // lattices
  const Lattice& lat_A(int p_id) const;  // A_P = projection image of A0
  const Lattice& lat_B(int p_id) const;  // B_P = B0 intersect a_P
  Lattice lat_A_rel(int p_id, int q_id) const;  // A_P^Q = ker(A_P -> A_Q)
  Lattice lat_B_rel(int p_id, int q_id) const;  // projection of B_P onto a_P^Q
  Int c_order(int p_id) const;           // |A_P / B_P|

  // lift Z in A_Q to Z' in A_P with (Z')_Q = Z
  VecQ lift_fiber(int p_id, int q_id, const VecQ& z) const;

  // adjacency inside P(M): the unique separating facet of P, or -1
  int separating_facet(int p_id, int q_id) const;

  // nonzero for roots: sign of <root_i, interior of P>
  int root_sign(int p_id, int root_idx) const { return p(p_id).sign[root_idx]; }

 private:
  mutable std::vector<std::optional<Lattice>> a_cache_, b_cache_;
  friend ParabolicSystem build_system(MatQ space, MatQ gram,
                                      std::vector<SystemRoot> roots, Lattice a0,
                                      Lattice b0, const VecQ& dominant);
};

ParabolicSystem build_system(MatQ space, MatQ gram, std::vector<SystemRoot> roots,
                             Lattice a0, Lattice b0, const VecQ& dominant);

// An M-orthogonal family: values on P(M).
struct OrthFamily {
  int levi = -1;
  std::map<int, VecQ> values;  // parabolic id -> X_P

  const VecQ& at(int p_id) const { return values.at(p_id); }
  // X_Q for Q in F(M): projection of any X_P with P inside Q
  VecQ value(const ParabolicSystem& sys, int q_id) const;
  OrthFamily plus(const OrthFamily& other) const;
};

bool is_orthogonal(const ParabolicSystem& sys, const OrthFamily& fam);
bool is_regular(const ParabolicSystem& sys, const OrthFamily& fam);
bool is_entire(const ParabolicSystem& sys, const OrthFamily& fam);
OrthFamily constant_family(const ParabolicSystem& sys, int levi, const VecQ& x);

struct RootDatum {
  DatumConfig config;
  int rank = 0;      // number of simple roots
  int n = 0;         // ambient dimension
  MatQ cartan;       // <alpha_i, coroot_j>
  MatQ gram;
  std::vector<VecQ> simple_roots;    // covectors on the ambient space
  std::vector<VecQ> simple_coroots;  // the first `rank` basis vectors
  std::optional<MatQ> theta;         // ambient automorphism
  std::vector<MatQ> weyl;            // full Weyl group, ambient matrices
  ParabolicSystem sys;

  Rat d0(const VecQ& x) const;  // inf over simple roots of <alpha, x>
  int weyl_index(const MatQ& w) const;
  // the Weyl element sending the base chamber P0 to the chamber P
  MatQ chamber_weyl(int p_id) const;
  // W(a_M, a_M'): distinct restrictions to a_M of elements mapping a_M to a_M'
  std::vector<MatQ> weyl_set(int levi_m, int levi_m2) const;
};

RootDatum build_datum(const DatumConfig& config);

// T-family: P -> w_P T for the Weyl element with w_P(P0) = P
OrthFamily t_family(const RootDatum& d, const VecQ& t);
// Y(T): P -> w_P T + (T0 - w_P T0)
OrthFamily family_from_T(const RootDatum& d, const VecQ& t, const VecQ& t0);

} // namespace conelab
