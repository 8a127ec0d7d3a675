#pragma once

#include <string>
#include <vector>

#include "gk1/matrix.hpp"
#include "gk1/presented.hpp"
#include "gk1/report.hpp"

namespace gk1 {

// Spanning words of the Hopf subalgebra H-bullet of the dual, with F2-degree
// at most s_max, in lex order of (group index, s, l):
//   dihedral  Z(1,1) F2^s, X(1,1) F2^s
//   Taft      Omega^j F2^s F1^l                    j < n, l < m
//   Liu       Psi(1, gamma^j) F2^s F1^l            j < n, l < n
//   D         Z(1, gamma^j) F2^s F1^l, X(1, gamma^j) F2^s F1^l   j < m, l < m
std::vector<NFWord> hbullet_basis(const PresentedAlgebra& p, int s_max);

// True when the group part of w is one of the H-bullet group words.
bool in_hbullet(const PresentedAlgebra& p, const NFWord& w);

// <f, h> = Theta(f)(h).
Cyclo pair(const PresentedAlgebra& p, const NFWord& w, const Mono& b);
Cyclo pair(const PresentedAlgebra& p, const PElement& f, const Element& h);

struct PairingBounds {
  int s_max = 1;          // F2-degree of the sampled H-bullet words
  int basis_bound = -1;   // -1: l <= m for Taft, |j| <= 1 otherwise (3 for dihedral)
  int max_words = 12;     // cap on the word sample used for pair and triple checks
};

// Hopf pairing axioms on H-bullet words against a basis slice of H, plus
// closure of H-bullet under product, coproduct and antipode.
Report verify_pairing_axioms(const PresentedPtr& p, const PairingBounds& bounds);

// Pairing matrix between an H-side slice and an H-bullet word slice of equal
// size. The D layout (and the dihedral alias) uses rows h_{i,k,s,l},
// s in [-N, N], against columns G^{k'} F2^{i'+s'omega+N omega} F1^{l'} with
// G = Z(1,gamma) + xi X(1,gamma). Liu uses the same layout with g^{j+sn} y^l
// and Psi(1,gamma)^{j'}. Taft uses rows g^j x^{l+sm}, s in [0, N], against
// Omega^{j'} F2^{s'} F1^{l'}.
struct GramResult {
  ExactMatrix matrix;
  int rank = 0;
  bool full_rank = false;
  Cyclo det;
  // Entries that differ from the closed-form pairing value (D and dihedral).
  long closed_form_mismatches = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  double seconds = 0.0;
};

GramResult gram_rank(const PresentedPtr& p, int N);
// Suite "gram": full rank at truncation N.
Report verify_gram(const PresentedPtr& p, int N);

// Independence matrices of the spanning arguments for the dual algebras.
//   P3.3        Taft, ideal (x^m - lambda)^{nr}; lambda may be 0
//   P4.3        Liu, ideal (g^n - lambda)^r with lambda = alpha^omega = beta^n
//   P5.6-case1  D, ideal (g^m - lambda)^r (g^m - lambda^-1)^r, lambda = alpha^omega, beta = alpha^d
//   P5.6-case2  D, ideal (g^m - 1)^r
//   P5.6-case3  D, ideal (g^m + 1)^r with alpha^omega = -1 = beta^m
// For case 3 alpha and beta may be left unbound zero; roots are then searched
// in the working field.
struct ProofMatrixSpec {
  std::string id;
  int r = 1;
  Cyclo lambda;
  Cyclo alpha;
  Cyclo beta;
};

struct ProofMatrixResult {
  ExactMatrix matrix;
  Cyclo det;
  bool invertible = false;
  // Entry formula, factorization and ideal-annihilation checks.
  Report report;
};

std::vector<std::string> proof_matrix_ids();
// Throws ParamError on a family mismatch or a violated parameter constraint.
ProofMatrixResult proof_matrix(const PresentedPtr& p, const ProofMatrixSpec& spec);

}  // namespace gk1
