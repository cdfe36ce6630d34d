#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpt/chern.hpp"
#include "cpt/integer.hpp"
#include "cpt/iso_search.hpp"
#include "cpt/tower_ring.hpp"

namespace cpt {

enum class Family {
  CP3,    // CP^3
  GB2,    // P(gamma_1^k + e + e) over CP^1; (k)
  Eta2,   // P(eta_(s,a)) over CP^2; (s, a)
  Zeta3,  // P(zeta_(s,r,a)) over H_0 = CP^1 x CP^1; (s, r, a)
  Xi3,    // P(xi_(s,r,b)) over H_1; (s, r, b)
  M8,     // M_a(u) = P(eta_(a,0,u)) over CP^3; (a, u)
  N8,     // N(u) = P(eta_(0,1,u)) over CP^3; (u)
  CP,     // CP^n; (n)
  Hirzebruch,  // H_k; (k)
  Milnor,      // H_{i,j}; (i, j)
};

/// A catalog entry, written "Family:p1,p2,..." (e.g. "M8:0,2", "CP3").
struct FamilyId {
  Family family = Family::CP3;
  std::vector<Integer> params;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend bool operator<(const FamilyId& a, const FamilyId& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.params < b.params;
  }
};

FamilyId make_id(Family f, std::vector<Integer> params);
/// Throws ParseError on unknown names or wrong parameter counts.
FamilyId parse_family(std::string_view text);
std::string to_string(const FamilyId& id);
/// Whether `text` looks like a catalog id rather than a file path.
bool looks_like_family(std::string_view text);

/// The tower. Throws SpecError for parameters outside the family's domain of
/// construction (e.g. alpha not in {0, 1}).
TowerSpec build(const FamilyId& id);
RingPresentation build_presentation(const FamilyId& id);
/// The bundle projectivized at the last stage, with the alpha tag for M8.
BundleDescriptor top_bundle(const FamilyId& id);

/// Canonical representative of the ring isomorphism class, following the
/// classification (and the coincidences it claims).
FamilyId ring_class(const FamilyId& id);

/// Every family of the dimension <= 6 classification with parameters in
/// [-n, n] intersected with its listed domain. Xi3 is stored with (s, r) =
/// (0, 1); Xi3(1,1,b) is the same class as Xi3(0,1,-b).
std::vector<FamilyId> canonical_list(int n);

struct CoincidenceFixture {
  FamilyId a;
  FamilyId b;
  /// Frozen from search at bound 2; empty when no certificate exists.
  std::optional<IsoCertificate> certificate;
  /// The pair belongs to the two conflicting cross-base statements.
  bool discrepancy = false;
  std::string note;
};

std::vector<CoincidenceFixture> coincidence_fixtures();

enum class Pi6 { Z12, Z6, Unknown };

struct Pi6Record {
  FamilyId family;
  bool divisibility_ok = false;
  Pi6 pi6 = Pi6::Unknown;
};

enum class Pi6Verdict { Distinct, SameRing, Unknown };

struct Pi6Comparison {
  Pi6Verdict verdict = Pi6Verdict::Unknown;
  Pi6Record a;
  Pi6Record b;
};

/// Stored homotopy data for M8(a, u): when u(u+1)/12 is an integer q, pi_6
/// is Z12 if a = q mod 2 and Z6 otherwise. Throws SpecError for non-M8 ids.
Pi6Record pi6_record(const FamilyId& m8);

/// Throws SpecError unless both are M8 with the same u.
Pi6Comparison pi6_distinguish(const FamilyId& a, const FamilyId& b);

std::string to_string(Pi6 v);
std::string to_string(Pi6Verdict v);

}  // namespace cpt
