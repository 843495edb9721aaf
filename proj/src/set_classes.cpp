#include "set_classes.hpp"

#include <stdexcept>

#include "space.hpp"

namespace topo {

namespace {

struct ClassInfo {
  SetClass cls;
  std::string_view name;
  int dual;  // index of the dual tag, -1 when none
  bool closed_variant;
  bool open_variant;
};

// Order must match the enum.
constexpr ClassInfo kClasses[] = {
    {SetClass::Closed, "closed", 1, true, false},
    {SetClass::Open, "open", 0, false, true},
    {SetClass::RegularClosed, "regular-closed", 3, true, false},
    {SetClass::RegularOpen, "regular-open", 2, false, true},
    {SetClass::SemiClosed, "semi-closed", 5, true, false},
    {SetClass::SemiOpen, "semi-open", 4, false, true},
    {SetClass::PreClosed, "pre-closed", 7, true, false},
    {SetClass::PreOpen, "pre-open", 6, false, true},
    {SetClass::WClosed, "w-closed", 9, true, false},
    {SetClass::WOpen, "w-open", 8, false, true},
    {SetClass::AlphaClosed, "alpha-closed", 11, true, false},
    {SetClass::AlphaOpen, "alpha-open", 10, false, true},
    {SetClass::BetaClosed, "beta-closed", 13, true, false},
    {SetClass::BetaOpen, "beta-open", 12, false, true},
    {SetClass::BClosed, "b-closed", 15, true, false},
    {SetClass::BOpen, "b-open", 14, false, true},
    {SetClass::AlphaStarSet, "alpha-star-set", -1, false, false},
    {SetClass::CSet, "c-set", -1, false, false},
    {SetClass::HClosed, "h-closed", 19, true, false},
    {SetClass::HOpen, "h-open", 18, false, true},
    {SetClass::GhClosed, "gh-closed", 21, true, false},
    {SetClass::GhOpen, "gh-open", 20, false, true},
    {SetClass::RegularHOpen, "regular-h-open", -1, false, true},
    {SetClass::RghClosed, "rgh-closed", 24, true, false},
    {SetClass::RghOpen, "rgh-open", 23, false, true},
    {SetClass::HCgClosed, "hcg-closed", 26, true, false},
    {SetClass::HCgOpen, "hcg-open", 25, false, true},
    {SetClass::CStarOpen, "c-star-open", 28, false, true},
    {SetClass::CStarClosed, "c-star-closed", 27, true, false},
    {SetClass::SCStarClosed, "sc-star-closed", 30, true, false},
    {SetClass::SCStarOpen, "sc-star-open", 29, false, true},
    {SetClass::GClosed, "g-closed", 32, true, false},
    {SetClass::GOpen, "g-open", 31, false, true},
    {SetClass::GSCStarClosed, "g-sc-star-closed", 34, true, false},
    {SetClass::GSCStarOpen, "g-sc-star-open", 33, false, true},
    {SetClass::SCStarGClosed, "sc-star-g-closed", 36, true, false},
    {SetClass::SCStarGOpen, "sc-star-g-open", 35, false, true},
    {SetClass::PiClosed, "pi-closed", -1, true, false},
};

static_assert(sizeof(kClasses) / sizeof(kClasses[0]) == kSetClassCount);

}  // namespace

std::string_view class_name(SetClass cls) { return kClasses[class_index(cls)].name; }

std::optional<SetClass> class_from_name(std::string_view name) {
  for (const auto& info : kClasses) {
    if (info.name == name) return info.cls;
  }
  return std::nullopt;
}

std::optional<SetClass> dual_class(SetClass cls) {
  const int d = kClasses[class_index(cls)].dual;
  if (d < 0) return std::nullopt;
  return kClasses[d].cls;
}

bool is_closed_variant(SetClass cls) { return kClasses[class_index(cls)].closed_variant; }
bool is_open_variant(SetClass cls) { return kClasses[class_index(cls)].open_variant; }

// Hull/kernel tables: hull(a) = AND of all family members containing a,
// kernel(a) = OR of all family members contained in a. Both computed with
// the subset-lattice DP in O(2^n * n).
const std::vector<Mask>& Space::hull_table(SetClass cls) const {
  auto& slot = hulls_[class_index(cls)];
  if (slot) return *slot;
  const auto& fam = family(cls);
  const std::uint32_t n = points();
  const std::uint32_t count = mask_count();
  std::vector<Mask> tab(count);
  for (Mask m = 0; m < count; ++m) tab[m] = fam[m] ? m : ~Mask{0};
  for (std::uint32_t i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < count; ++m) {
      if (!(m & bit)) tab[m] &= tab[m | bit];
    }
  }
  slot = std::move(tab);
  return *slot;
}

const std::vector<Mask>& Space::kernel_table(SetClass cls) const {
  auto& slot = kernels_[class_index(cls)];
  if (slot) return *slot;
  const auto& fam = family(cls);
  const std::uint32_t n = points();
  const std::uint32_t count = mask_count();
  std::vector<Mask> tab(count);
  for (Mask m = 0; m < count; ++m) tab[m] = fam[m] ? m : 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask m = 0; m < count; ++m) {
      if (m & bit) tab[m] |= tab[m ^ bit];
    }
  }
  slot = std::move(tab);
  return *slot;
}

void Space::ensure_family(SetClass cls) const {
  auto& slot = families_[class_index(cls)];
  if (slot) return;

  const std::uint32_t count = mask_count();
  const Mask full_set = full();
  std::vector<std::uint8_t> bits(count, 0);

  auto cl = [&](Mask m) { return closure_tab_[m]; };
  auto in = [&](Mask m) { return interior_tab_[m]; };
  auto complement_of_dual = [&](SetClass dual) {
    const auto& dual_fam = family(dual);
    for (Mask a = 0; a < count; ++a) bits[a] = dual_fam[full_set & ~a];
  };

  switch (cls) {
    case SetClass::Closed:
      for (Mask a = 0; a < count; ++a) bits[a] = cl(a) == a;
      break;
    case SetClass::Open:
      for (Mask a = 0; a < count; ++a) bits[a] = topo_.is_open(a);
      break;
    case SetClass::RegularClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = a == cl(in(a));
      break;
    case SetClass::RegularOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = a == in(cl(a));
      break;
    case SetClass::SemiClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(in(cl(a)), a);
      break;
    case SetClass::SemiOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(a, cl(in(a)));
      break;
    case SetClass::PreClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(cl(in(a)), a);
      break;
    case SetClass::PreOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(a, in(cl(a)));
      break;
    case SetClass::AlphaClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(cl(in(cl(a))), a);
      break;
    case SetClass::AlphaOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(a, in(cl(in(a))));
      break;
    case SetClass::BetaClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(in(cl(in(a))), a);
      break;
    case SetClass::BetaOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(a, cl(in(cl(a))));
      break;
    case SetClass::BClosed:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(in(cl(a)) & cl(in(a)), a);
      break;
    case SetClass::BOpen:
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(a, in(cl(a)) | cl(in(a)));
      break;
    case SetClass::AlphaStarSet:
      for (Mask a = 0; a < count; ++a) bits[a] = in(cl(in(a))) == in(a);
      break;
    case SetClass::CSet: {
      // A = U /\ V with U open and V an alpha*-set. The empty set qualifies
      // via U = {} regardless of V.
      const auto alpha_star = family_masks(SetClass::AlphaStarSet);
      for (Mask a = 0; a < count; ++a) {
        bool found = false;
        for (Mask u : topo_.opens()) {
          if (!subset_of(a, u)) continue;
          for (Mask v : alpha_star) {
            if ((u & v) == a) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        bits[a] = found;
      }
      break;
    }
    // Conditions of the shape "for every class member U containing A,
    // op(A) <= U" reduce to op(A) <= hull(A) over that family.
    case SetClass::WClosed: {
      const auto& hull = hull_table(SetClass::SemiOpen);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(cl(a), hull[a]);
      break;
    }
    case SetClass::WOpen:
      complement_of_dual(SetClass::WClosed);
      break;
    case SetClass::HClosed: {
      const auto& hull = hull_table(SetClass::WOpen);
      const auto& s_hull = hull_table(SetClass::SemiClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(s_hull[a], hull[a]);
      break;
    }
    case SetClass::HOpen:
      complement_of_dual(SetClass::HClosed);
      break;
    case SetClass::GhClosed: {
      const auto& hull = hull_table(SetClass::HOpen);
      const auto& h_hull = hull_table(SetClass::HClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(h_hull[a], hull[a]);
      break;
    }
    case SetClass::GhOpen:
      complement_of_dual(SetClass::GhClosed);
      break;
    case SetClass::RegularHOpen: {
      const auto regular_open = family_masks(SetClass::RegularOpen);
      const auto& h_hull = hull_table(SetClass::HClosed);
      for (Mask a = 0; a < count; ++a) {
        bool found = false;
        for (Mask u : regular_open) {
          if (subset_of(u, a) && subset_of(a, h_hull[u])) {
            found = true;
            break;
          }
        }
        bits[a] = found;
      }
      break;
    }
    case SetClass::RghClosed: {
      const auto& hull = hull_table(SetClass::RegularHOpen);
      const auto& h_hull = hull_table(SetClass::HClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(h_hull[a], hull[a]);
      break;
    }
    case SetClass::RghOpen:
      complement_of_dual(SetClass::RghClosed);
      break;
    case SetClass::HCgClosed: {
      const auto& hull = hull_table(SetClass::CSet);
      const auto& h_hull = hull_table(SetClass::HClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(h_hull[a], hull[a]);
      break;
    }
    case SetClass::HCgOpen:
      complement_of_dual(SetClass::HCgClosed);
      break;
    case SetClass::CStarOpen:
      for (Mask a = 0; a < count; ++a)
        bits[a] = subset_of(in(cl(a)), a) && subset_of(a, cl(in(a)));
      break;
    case SetClass::CStarClosed:
      // The complement-dual condition reduces to the same pair of
      // inclusions, so the family is self-complementary.
      for (Mask a = 0; a < count; ++a)
        bits[a] = subset_of(in(cl(a)), a) && subset_of(a, cl(in(a)));
      break;
    case SetClass::SCStarClosed: {
      const auto& hull = hull_table(SetClass::CStarOpen);
      const auto& s_hull = hull_table(SetClass::SemiClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(s_hull[a], hull[a]);
      break;
    }
    case SetClass::SCStarOpen:
      complement_of_dual(SetClass::SCStarClosed);
      break;
    case SetClass::GClosed: {
      const auto& hull = hull_table(SetClass::Open);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(cl(a), hull[a]);
      break;
    }
    case SetClass::GOpen:
      complement_of_dual(SetClass::GClosed);
      break;
    case SetClass::GSCStarClosed: {
      const auto& hull = hull_table(SetClass::Open);
      const auto& sc_hull = hull_table(SetClass::SCStarClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(sc_hull[a], hull[a]);
      break;
    }
    case SetClass::GSCStarOpen:
      complement_of_dual(SetClass::GSCStarClosed);
      break;
    case SetClass::SCStarGClosed: {
      const auto& hull = hull_table(SetClass::SCStarOpen);
      const auto& sc_hull = hull_table(SetClass::SCStarClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = subset_of(sc_hull[a], hull[a]);
      break;
    }
    case SetClass::SCStarGOpen:
      complement_of_dual(SetClass::SCStarGClosed);
      break;
    case SetClass::PiClosed: {
      // Finite intersections of regular-closed sets are exactly the fixed
      // points of the regular-closed hull (the family is finite).
      const auto& hull = hull_table(SetClass::RegularClosed);
      for (Mask a = 0; a < count; ++a) bits[a] = hull[a] == a;
      break;
    }
  }

  slot = std::move(bits);
}

bool Space::member(Mask a, SetClass cls) const { return family(cls)[a] != 0; }

const std::vector<std::uint8_t>& Space::family(SetClass cls) const {
  ensure_family(cls);
  return *families_[class_index(cls)];
}

std::vector<Mask> Space::family_masks(SetClass cls) const {
  const auto& fam = family(cls);
  std::vector<Mask> out;
  for (Mask a = 0; a < mask_count(); ++a) {
    if (fam[a]) out.push_back(a);
  }
  return out;
}

Mask Space::class_closure(Mask a, SetClass cls) const {
  if (!is_closed_variant(cls))
    throw std::invalid_argument("class_closure requires a closed-variant class, got " +
                                std::string(class_name(cls)));
  return hull_table(cls)[a];
}

Mask Space::class_interior(Mask a, SetClass cls) const {
  if (!is_open_variant(cls))
    throw std::invalid_argument("class_interior requires an open-variant class, got " +
                                std::string(class_name(cls)));
  return kernel_table(cls)[a];
}

}  // namespace topo
