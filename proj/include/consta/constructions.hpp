#pragma once

// Secondary constructions.  Every output carries its inputs' lineage and a
// predicted distance record (a proven lower bound derived from the inputs'
// own records, or Unknown when an input's distance is not known).

#include <optional>
#include <vector>

#include "json.hpp"

#include "consta/code.hpp"

namespace consta {

/// Stand-in for "no nonzero codeword" in the bound formulas.
constexpr int kInfiniteDistance = 1 << 20;

/// Proven lower bound of a code's distance (kInfiniteDistance for the zero
/// code), or nullopt when nothing is known.
std::optional<int> known_lower(const LinearCode& c);

/// d >= min(d2, d1 + d3)
int x_bound(int d1, int d2, int d3);
/// d >= min(delta0, d1 + delta1, d2 + delta2, d + delta1 + delta2)
int xx_bound(int d, int d1, int d2, int delta0, int delta1, int delta2);

/// E = {(c + sum lambda_i l_i, sum lambda_i z_i)}: C2 padded with zeros plus
/// the leaders l_i of C1 over C2 (rows of rref(C1) independent modulo C2)
/// glued to the generator rows z_i of C3 in order.
/// Requires C2 inside C1 and dim C3 = k1 - k2; result is [n + n3, k1].
LinearCode construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3);

/// Same, with explicit coset leaders (rows of C1 independent modulo C2,
/// paired with the rows of C3 in order).
LinearCode construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                          const std::vector<std::vector<Elem>>& leaders);

struct XPairing {
  std::vector<std::vector<Elem>> leaders;
  std::vector<int> direction_weights;  // min weight of each coset direction, canonical order
  int certified = 0;  // min(d2, min over lambda of mu(lambda) + wt(lambda Z))
};

/// Picks the leaders by coset weight: every direction lambda of C1/C2
/// (first nonzero entry 1) gets mu(lambda), the minimum weight of the coset
/// sum lambda_i l_i + C2.  The pairing of coset directions with C3 labels is
/// then the basis with the best certificate, searched exhaustively when
/// GF(q)^r has at most 2^20 ordered r-tuples, otherwise among the canonical
/// and the heaviest-first greedy bases.  Needs exact distances of r + k2
/// dimensional codes, one per direction, so r must be small.
XPairing tuned_x_pairing(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                         int max_directions = 4096);

/// E = {(c, phiA(c), phiB(c)) : c in C} where phiA : C -> D1 has kernel
/// C2sub and phiB : C -> D2 has kernel C1sub, so dim D1 = k - dim C2sub and
/// dim D2 = k - dim C1sub.  delta0 is the distance of C1sub cap C2sub,
/// computed here.
LinearCode construction_xx(const LinearCode& c, const LinearCode& c1sub, const LinearCode& c2sub,
                           const LinearCode& d1, const LinearCode& d2);

/// {c in C : c_P = 0} with the positions P removed.
LinearCode shorten(const LinearCode& c, const std::vector<int>& positions);
/// C with the positions P removed.
LinearCode puncture(const LinearCode& c, const std::vector<int>& positions);
/// Span of the first k' generator rows.
LinearCode subcode(const LinearCode& c, int k_prime);
/// Appends the coordinate -sum c_i.
LinearCode extend(const LinearCode& c);

/// hermitian_dual(C) is contained in C (square field order only).
bool hermitian_dual_containing(const LinearCode& c);

struct QuantumParams {
  int n = 0, k = 0, d = 0;
  DistanceStatus status = DistanceStatus::Unknown;
  bool self_dual = false;

  nlohmann::json to_json() const;
};

/// [[n, 2k - n, >= d]] from a Hermitian dual-containing code over GF(4).
/// Throws Containment when the dual is not contained, and checks Hermitian
/// self-duality whenever 2k = n.
QuantumParams quantum_params(const LinearCode& c);
/// Parameter arithmetic only, for codes too large to rebuild.
QuantumParams quantum_params(int n, int k, int d, DistanceStatus status = DistanceStatus::Exact);

}  // namespace consta
