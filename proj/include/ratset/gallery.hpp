#ifndef RATSET_GALLERY_HPP
#define RATSET_GALLERY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ratset/automaton.hpp"

namespace ratset {

struct GallerySample {
  Rational value;
  std::string provenance;
};

struct GalleryEntry {
  std::string name;
  Base base;
  Automaton automaton;
  std::string description;
  std::vector<GallerySample> members;
  std::vector<GallerySample> non_members;
};

/// Names accepted by build_gallery.
std::vector<std::string> gallery_names();

/// Throws InvalidArgument on an unknown name. `k` overrides the default base
/// for the entries defined for every base (L0, L1, L2, S1_powers,
/// S3_reciprocal_powers); 0 keeps the default.
GalleryEntry build_gallery(std::string_view name, int k = 0);

struct L2Representation {
  std::size_t i = 0;  // trailing zeros of the denominator
  std::size_t j = 0;  // ones of the denominator
  BigInt numerator;
  BigInt denominator;  // k^i (k^j - 1)/(k - 1), base-k form 1^j 0^i
  PairWord word{Base(2), Order::Msb};  // canonical MSB pair word of (numerator, denominator)
};

/// Representation of x with a denominator of the form 1^j 0^i.
L2Representation repr_in_l2(Base base, const Rational& x);

/// (n, count of length-n words of pi_which(L(a))) for n = 0..n_max.
std::vector<std::pair<std::size_t, BigInt>> density_table(const Automaton& a,
                                                          int which,
                                                          std::size_t n_max);

}  // namespace ratset

#endif  // RATSET_GALLERY_HPP
