#include "tourlab/blowup.hpp"


namespace tourlab {

VertexSet Blowup::part(int i) const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < part_of.size(); ++v) {
    if (part_of[v] == i) mask |= std::uint64_t{1} << v;
  }
  return VertexSet::from_mask(mask);
}

Blowup blowup(const BlowupSpec& spec) {
  const int m = spec.base.order();
  if (static_cast<int>(spec.parts.size()) != m) {
    throw ArgumentError("blowup needs one part per base vertex");
  }
  int total = 0;
  for (const Tournament& p : spec.parts) total += p.order();
  if (total > kMaxOrder) throw CapacityError("blowup exceeds 64 vertices");

  std::vector<int> part_of;
  std::vector<int> offset(m);
  for (int i = 0; i < m; ++i) {
    offset[i] = static_cast<int>(part_of.size());
    part_of.insert(part_of.end(), spec.parts[i].order(), i + 1);
  }
  Tournament t(total);
  for (int a = 1; a <= total; ++a) {
    for (int b = a + 1; b <= total; ++b) {
      const int pa = part_of[a - 1];
      const int pb = part_of[b - 1];
      bool forward;
      if (pa == pb) {
        forward = spec.parts[pa - 1].arc(a - offset[pa - 1], b - offset[pb - 1]);
      } else {
        forward = spec.base.arc(pa, pb);
      }
      if (forward) {
        t.set_arc(a, b);
      } else {
        t.set_arc(b, a);
      }
    }
  }
  return Blowup{t, std::move(part_of)};
}

namespace {

void check_counts(const Tournament& base, const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != base.order()) {
    throw ArgumentError("need one count per base vertex");
  }
  int total = 0;
  for (int a : counts) {
    if (a < 1) throw ArgumentError("blowup counts must be at least 1");
    total += a;
    if (total > kMaxOrder) throw CapacityError("blowup exceeds 64 vertices");
  }
}

}  // namespace

Blowup transitive_blowup_with_parts(const Tournament& base, const std::vector<int>& counts) {
  check_counts(base, counts);
  BlowupSpec spec{base, {}};
  for (int a : counts) spec.parts.emplace_back(a);
  return blowup(spec);
}

Tournament transitive_blowup(const Tournament& base, const std::vector<int>& counts) {
  return transitive_blowup_with_parts(base, counts).tournament;
}

ExactInt blowup_det_formula(const Tournament& base, const std::vector<int>& counts) {
  check_counts(base, counts);
  std::uint64_t odd = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] % 2 == 1) odd |= std::uint64_t{1} << i;
  }
  return determinant(base, VertexSet::from_mask(odd));
}

VertexSet nine_det_witness(const BlowupSpec& spec) {
  if (spec.base.order() < 1 || static_cast<int>(spec.parts.size()) != spec.base.order()) {
    throw ArgumentError("nine_det_witness needs one part per base vertex");
  }
  int chosen = 0;
  for (int i = 1; i <= spec.base.order(); ++i) {
    if (!is_transitive(spec.parts[i - 1])) {
      chosen = i;
      break;
    }
  }
  if (chosen == 0) throw ArgumentError("every part is transitive");

  const Tournament& p = spec.parts[chosen - 1];
  VertexSet cycle;
  for_each_subset_of_size(p.vertices(), 3, [&](VertexSet x) {
    const std::vector<int> v = x.members();
    const bool cyclic = (p.arc(v[0], v[1]) && p.arc(v[1], v[2]) && p.arc(v[2], v[0])) ||
                        (p.arc(v[1], v[0]) && p.arc(v[2], v[1]) && p.arc(v[0], v[2]));
    if (cyclic) cycle = x;
    return !cyclic;
  });

  VertexSet witness;
  int offset = 0;
  for (int i = 1; i <= spec.base.order(); ++i) {
    if (i == chosen) {
      cycle.for_each([&](int v) { witness = witness.with(offset + v); });
    } else {
      witness = witness.with(offset + 1);
    }
    offset += spec.parts[i - 1].order();
  }
  return witness;
}

namespace {

// Smallest module containing `seed`: keep adding outside vertices that see
// the current set non-uniformly.
VertexSet module_closure(const Tournament& t, VertexSet seed) {
  VertexSet m = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x : m.complement(t.order()).members()) {
      const VertexSet beaten = t.out_set(x) & m;
      if (!beaten.empty() && beaten != m) {
        m = m.with(x);
        grew = true;
      }
    }
  }
  return m;
}

}  // namespace

std::optional<BlowupStructure> detect_blowup_structure(const Tournament& t) {
  const int n = t.order();
  if (n > 16) throw CapacityError("blowup detection supports n <= 16");
  std::vector<VertexSet> classes;
  VertexSet assigned;
  for (int v = 1; v <= n; ++v) {
    if (assigned.contains(v)) continue;
    VertexSet c = VertexSet::of({v});
    for (int u = v + 1; u <= n; ++u) {
      if (assigned.contains(u) || c.contains(u)) continue;
      const VertexSet m = module_closure(t, c.with(u));
      if (m == t.vertices() || !(m & assigned).empty()) continue;
      if (!transitive_order(t, m)) continue;
      c = m;
    }
    assigned = assigned | c;
    classes.push_back(c);
  }
  if (static_cast<int>(classes.size()) == n) return std::nullopt;
  std::vector<int> reps;
  for (VertexSet c : classes) reps.push_back(c.first());
  return BlowupStructure{induce_ordered(t, reps), std::move(classes)};
}

Tournament reassemble(const Tournament& t, const BlowupStructure& s) {
  BlowupSpec spec{s.base, {}};
  std::vector<int> labels;
  for (VertexSet p : s.parts) {
    spec.parts.push_back(induce(t, p));
    for (int v : p.members()) labels.push_back(v);
  }
  const Blowup b = blowup(spec);
  return relabel(b.tournament, labels);
}

}  // namespace tourlab
