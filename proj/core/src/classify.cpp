#include "tourlab/classify.hpp"

#include <array>

#include "tourlab/blowup.hpp"
#include "tourlab/diamonds.hpp"
#include "tourlab/lnfamily.hpp"

namespace tourlab {

int base_order(BaseKind kind) noexcept {
  switch (kind) {
    case BaseKind::L2: return 2;
    case BaseKind::L4: return 4;
    case BaseKind::L6: return 6;
  }
  return 0;
}

std::string to_string(BaseKind kind) {
  return "L" + std::to_string(base_order(kind));
}

bool verify_certificate(const Tournament& t, const BlowupCertificate& cert) {
  const int n = t.order();
  const int m = base_order(cert.base_kind);
  if (static_cast<int>(cert.parts.size()) != m) return false;
  if (!cert.switch_set.vertices.subset_of(t.vertices())) return false;

  std::vector<int> labels;
  std::vector<int> counts;
  std::vector<int> kept;
  std::uint64_t seen = 0;
  for (int i = 0; i < m; ++i) {
    const auto& part = cert.parts[i];
    if (part.empty()) {
      if (cert.base_kind != BaseKind::L2) return false;
      continue;
    }
    kept.push_back(i + 1);
    counts.push_back(static_cast<int>(part.size()));
    for (int v : part) {
      if (v < 1 || v > n) return false;
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (seen & bit) return false;
      seen |= bit;
      labels.push_back(v);
    }
  }
  if (seen != t.vertices().mask()) return false;

  const Tournament base = induce_ordered(make_ln(m), kept);
  const Tournament rebuilt = relabel(transitive_blowup(base, counts), labels);
  return rebuilt == switched(t, cert.switch_set);
}

SubdetResult max_subdet(const Tournament& t, int max_size) {
  const int n = t.order();
  if (n > kMaxSubdetOrder) throw CapacityError("max_subdet supports n <= 12");
  SubdetResult best;
  bool found = false;
  for (int size = 2; size <= n && size <= max_size; size += 2) {
    for_each_subset_of_size(t.vertices(), size, [&](VertexSet x) {
      const ExactInt d = determinant(t, x);
      if (!found || d > best.value || (d == best.value && lex_less(x, best.subset))) {
        best = {d, x};
        found = true;
      }
      return true;
    });
  }
  return best;
}

bool in_dk(const Tournament& t, int k) {
  if (k <= 0 || k % 2 == 0) throw ArgumentError("level must be odd and positive");
  const int n = t.order();
  if (n > kMaxSubdetOrder) throw CapacityError("in_dk supports n <= 12");
  const ExactInt bound = static_cast<ExactInt>(k) * k;
  bool ok = true;
  for (int size = 2; size <= n && ok; size += 2) {
    for_each_subset_of_size(t.vertices(), size, [&](VertexSet x) {
      ok = determinant(t, x) <= bound;
      return ok;
    });
  }
  return ok;
}

namespace {

void check_recognizer_order(const Tournament& t) {
  if (t.order() > kMaxRecognizerOrder) throw CapacityError("recognizers support n <= 16");
}

BlowupCertificate transitive_certificate(SwitchSet w, const std::vector<int>& order) {
  // L_2 has 2 -> 1, so the sink is the lone first part.
  BlowupCertificate cert{w, BaseKind::L2, {{order.back()}, {}}};
  cert.parts[1].assign(order.begin(), order.end() - 1);
  return cert;
}

// Tries every switch W_S inside S (avoiding min S) and every choice of the
// vertex playing u_m so that the switch of T[S] is L_m with u_1..u_{m-1} in
// dominance order. Each outside vertex must then be a covertex or revertex
// of exactly one base vertex; revertices are switched over, parts formed,
// and the result checked by verify_certificate().
std::optional<BlowupCertificate> recognize_over(const Tournament& t, VertexSet s,
                                                BaseKind kind) {
  const int m = base_order(kind);
  const int n = t.order();
  const std::vector<int> members = s.members();
  const VertexSet free_part = s.without(s.first());
  const std::vector<int> free_members = free_part.members();
  const VertexSet outside = s.complement(n);

  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free_members.size()); ++sub) {
    VertexSet w_s;
    for (std::size_t i = 0; i < free_members.size(); ++i) {
      if ((sub >> i) & 1u) w_s = w_s.with(free_members[i]);
    }
    const Tournament t1 = switched(t, w_s);
    for (int c : members) {
      const auto order = transitive_order(t1, s.without(c));
      if (!order) continue;
      bool pattern_ok = true;
      for (int i = 0; i < m - 1 && pattern_ok; ++i) {
        pattern_ok = t1.arc(c, (*order)[i]) == (i % 2 == 0);
      }
      if (!pattern_ok) continue;

      std::array<int, 6> base{};
      for (int i = 0; i < m - 1; ++i) base[i] = (*order)[i];
      base[m - 1] = c;

      std::array<VertexSet, 6> parts{};
      for (int i = 0; i < m; ++i) parts[i] = VertexSet::of({base[i]});
      VertexSet w_rev;
      bool assigned_all = true;
      outside.for_each([&](int v) {
        if (!assigned_all) return;
        int matches = 0;
        int slot = 0;
        bool reverse = false;
        for (int i = 0; i < m; ++i) {
          bool co = true;
          bool re = true;
          for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const bool same = t1.arc(v, base[j]) == t1.arc(base[i], base[j]);
            co = co && same;
            re = re && !same;
          }
          if (co || re) {
            ++matches;
            slot = i;
            reverse = re;
          }
        }
        if (matches != 1) {
          assigned_all = false;
          return;
        }
        parts[slot] = parts[slot].with(v);
        if (reverse) w_rev = w_rev.with(v);
      });
      if (!assigned_all) continue;

      const Tournament t2 = switched(t1, w_rev);
      BlowupCertificate cert{SwitchSet{w_s ^ w_rev}.normalized(n), kind, {}};
      bool parts_ok = true;
      for (int i = 0; i < m && parts_ok; ++i) {
        auto part_order = transitive_order(t2, parts[i]);
        if (!part_order) {
          parts_ok = false;
        } else {
          cert.parts.push_back(std::move(*part_order));
        }
      }
      if (parts_ok && verify_certificate(t, cert)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BlowupCertificate> recognize_d1(const Tournament& t) {
  check_recognizer_order(t);
  const int n = t.order();
  // Normalised switch sets avoid vertex 1; enumerate them as masks over
  // vertices 2..n and keep the lexicographically least success.
  std::optional<BlowupCertificate> best;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t sub = 0; sub < limit; ++sub) {
    const VertexSet w = VertexSet::from_mask(sub << 1);
    if (best && !lex_less(w, best->switch_set.vertices)) continue;
    const Tournament s = switched(t, w);
    if (!is_transitive(s)) continue;
    best = transitive_certificate(SwitchSet{w}, *transitive_order(s));
    if (w.empty()) break;
  }
  return best;
}

std::optional<BlowupCertificate> recognize_d3(const Tournament& t) {
  check_recognizer_order(t);
  if (auto cert = recognize_d1(t)) return cert;
  VertexSet diamond;
  for_each_subset_of_size(t.vertices(), 4, [&](VertexSet x) {
    if (induces_diamond(t, x)) diamond = x;
    return diamond.empty();
  });
  if (diamond.empty()) return std::nullopt;
  return recognize_over(t, diamond, BaseKind::L4);
}

std::optional<BlowupCertificate> recognize_d5(const Tournament& t) {
  check_recognizer_order(t);
  if (auto cert = recognize_d3(t)) return cert;
  VertexSet core;
  for_each_subset_of_size(t.vertices(), 6, [&](VertexSet x) {
    if (determinant(t, x) == 25) core = x;
    return core.empty();
  });
  if (core.empty()) return std::nullopt;
  return recognize_over(t, core, BaseKind::L6);
}

ClassifyResult classify(const Tournament& t) {
  if (t.order() > kMaxSubdetOrder) throw CapacityError("classify supports n <= 12");
  const SubdetResult best = max_subdet(t);
  ClassifyResult result;
  result.witness_subset = best.subset;
  int level = 1;
  while (static_cast<ExactInt>(level) * level < best.value) level += 2;
  if (static_cast<ExactInt>(level) * level != best.value) {
    throw InvariantError("max subdeterminant " + to_string(best.value) + " is not an odd square");
  }
  result.level = level;
  if (level == 1) {
    result.certificate = recognize_d1(t);
  } else if (level == 3) {
    result.certificate = recognize_d3(t);
  } else if (level == 5) {
    result.certificate = recognize_d5(t);
  }
  if (level <= 5 && !result.certificate) {
    throw InvariantError("no blowup certificate found for a level-" + std::to_string(level) +
                         " tournament " + t.to_bits());
  }
  return result;
}

bool six_profile_allowed(std::int64_t delta, ExactInt det) noexcept {
  switch (delta) {
    case 0: return det == 1;
    case 3:
    case 4: return det == 1 || det == 9;
    case 5: return det == 25;
    case 6: return det == 49 || det == 81;
    default: return false;
  }
}

SixProfile six_profile(const Tournament& t6) {
  if (t6.order() != 6) throw ArgumentError("six_profile needs a 6-tournament");
  const SixProfile p{diamond_count(t6), determinant(t6)};
  if (!six_profile_allowed(p.delta, p.det)) {
    throw InvariantError("6-tournament " + t6.to_bits() + " has (delta, det) = (" +
                         std::to_string(p.delta) + ", " + to_string(p.det) + ")");
  }
  return p;
}

}  // namespace tourlab
