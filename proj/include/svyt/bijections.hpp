#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "svyt/prograph.hpp"
#include "svyt/tableau.hpp"

namespace svyt {

// Coproduct-only prographs (k-ary trees with an input edge) to two-row
// tableaux of shape (n,n) and density (k-1,1): rightmost-child labels fill
// the bottom row, the rest the top row.
SetValuedTableau phi_k_tree(const Prograph& g);

// Closed prographs to SVT(n^3, (1,k-1,1)): leftmost coproduct children fill
// the top row, remaining coproduct children the middle row, product outputs
// the bottom row.  Label 0 is ignored.
SetValuedTableau phi(const Prograph& g);

// Inverse of phi, rebuilding the edge-labelled prograph entry by entry.
Prograph phi_inverse(const SetValuedTableau& t);

// Non-rectangular extension: justification, phi, then deletion of the first
// (x-1)/(k-1) top cells and last (y-1)/(k-1) bottom cells with reindexing.
// Requires x = 1 mod (k-1).
SetValuedTableau psi(const Prograph& g);

// Same tableau computed directly from the x-fold depth-left search, with no
// justification step.
SetValuedTableau tau(const Prograph& g);

struct VerifyReport {
  std::string identity;
  std::string grid;
  long long cases_checked = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
  nlohmann::ordered_json to_json() const;
};

// phi(rotate(G)) == schutzenberger(phi(G)) over all of PC^k(n).
VerifyReport verify_schutzenberger_square(int k, int n);

// psi(rotate(G)) == skew_schutzenberger(psi(G)) over PC^k_x(n,m).
VerifyReport verify_skew_square(int k, int x, int n, int m);

// phi_inverse(phi(G)) == G over PC^k(n), and phi(phi_inverse(T)) == T over
// SVT(n^3,(1,k-1,1)).
VerifyReport verify_roundtrip(int k, int n);

// |PC^k(n)| from prograph enumeration equals |SVT(n^3,(1,k-1,1))| from
// tableau enumeration.
VerifyReport verify_cardinality(int k, int n);

// tau(G) == psi(G) over PC^k_x(n,m).
VerifyReport verify_tau_psi(int k, int x, int n, int m);

}  // namespace svyt
