#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tourlab/linalg.hpp"
#include "tourlab/switching.hpp"
#include "tourlab/tournament.hpp"

namespace tourlab {

enum class BaseKind { L2, L4, L6 };

int base_order(BaseKind kind) noexcept;
std::string to_string(BaseKind kind);

/// T switched by W is the transitive blowup of L_m (m = base order) with
/// part X_i replacing base vertex i; each part is listed in its dominance
/// order. Only an L2 certificate may have an empty part (n = 1).
struct BlowupCertificate {
  SwitchSet switch_set;
  BaseKind base_kind = BaseKind::L2;
  std::vector<std::vector<int>> parts;
};

/// Rebuilds the blowup from the certificate alone and compares it with the
/// switch of T. Never throws on malformed certificates; returns false.
bool verify_certificate(const Tournament& t, const BlowupCertificate& cert);

inline constexpr int kMaxSubdetOrder = 12;
inline constexpr int kMaxRecognizerOrder = 16;

struct SubdetResult {
  ExactInt value = 1;
  /// Lexicographically least achiever; empty only when n = 1.
  VertexSet subset;
};

/// Largest det(T[X]) over nonempty X of even size <= max_size (default:
/// all). CapacityError for n > 12.
SubdetResult max_subdet(const Tournament& t, int max_size = kMaxOrder);

/// Every even subtournament has det <= k^2. ArgumentError unless k is odd
/// and positive; CapacityError for n > 12.
bool in_dk(const Tournament& t, int k);

/// Lexicographically least W (avoiding vertex 1) switching T to a
/// transitive tournament. CapacityError for n > 16.
std::optional<BlowupCertificate> recognize_d1(const Tournament& t);
/// Switch of a transitive blowup of L_2 or L_4.
std::optional<BlowupCertificate> recognize_d3(const Tournament& t);
/// Switch of a transitive blowup of L_2, L_4 or L_6.
std::optional<BlowupCertificate> recognize_d5(const Tournament& t);

struct ClassifyResult {
  int level = 1;
  VertexSet witness_subset;
  std::optional<BlowupCertificate> certificate;
};

/// Least odd k with T in D_k, a witness subset with det k^2, and a
/// certificate for k <= 5. CapacityError for n > 12.
ClassifyResult classify(const Tournament& t);

struct SixProfile {
  std::int64_t delta = 0;
  ExactInt det = 0;
};

/// (delta, det) of a 6-tournament, checked against the table of possible
/// pairs. ArgumentError unless n = 6; InvariantError off the table.
SixProfile six_profile(const Tournament& t6);
bool six_profile_allowed(std::int64_t delta, ExactInt det) noexcept;

}  // namespace tourlab
