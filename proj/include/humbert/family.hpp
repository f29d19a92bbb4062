#pragma once

namespace humbert {

/// Selector for the explicit families of non-simple period matrices: a
/// finite family (c, e) with gcd(m, c, e) = 1 and 0 <= c, e <= m, or the
/// infinity family.
struct FamilyId {
  bool inf = false;
  long long c = 0, e = 0;

  static FamilyId finite(long long c, long long e) {
    FamilyId i;
    i.c = c;
    i.e = e;
    return i;
  }
  static FamilyId infinity() {
    FamilyId i;
    i.inf = true;
    return i;
  }

  void validate(long long m) const;  // throws std::invalid_argument
};

}  // namespace humbert
