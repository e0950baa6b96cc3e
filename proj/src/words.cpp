#include "sl2roots/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sl2roots {

WordSpec::WordSpec(std::vector<std::uint64_t> exps) : exponents(std::move(exps)) {
  if (exponents.empty()) throw std::invalid_argument("word needs at least one letter");
  for (std::uint64_t r : exponents)
    if (r == 0) throw std::invalid_argument("word exponents must be positive");
}

std::string WordSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    os << (i ? "," : "") << exponents[i];
  return os.str();
}

GroupTables::GroupTables(std::uint32_t q, std::uint32_t cap) : F_(q) {
  if (q > cap)
    throw CapExceeded("group enumeration capped at q <= " + std::to_string(cap));
  classes_ = class_table(F_);
  members_.resize(classes_.size());
  const std::size_t Q = q;
  class_of_.assign(Q * Q * Q * Q, 0);
  for (const Sl2Elem& g : enumerate_sl2(F_)) {
    const ClassType t = classify(g);
    std::size_t k = 0;
    while (!(classes_[k].type == t)) ++k;
    class_of_[element_index(g)] = static_cast<std::uint16_t>(k);
    members_[k].push_back(g);
  }
}

std::vector<bool> GroupTables::power_classes(std::uint64_t r) const {
  std::vector<bool> mask(classes_.size(), false);
  for (const ClassEntry& e : classes_) mask[class_of(e.representative.pow(r))] = true;
  return mask;
}

std::vector<bool> GroupTables::product(const std::vector<bool>& a,
                                       const std::vector<bool>& b) const {
  std::vector<bool> out(classes_.size(), false);
  std::size_t hit = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!a[i]) continue;
    const Sl2Elem& rep = classes_[i].representative;
    for (std::size_t j = 0; j < classes_.size(); ++j) {
      if (!b[j]) continue;
      for (const Sl2Elem& h : members_[j]) {
        const std::size_t k = class_of(rep * h);
        if (!out[k]) {
          out[k] = true;
          if (++hit == out.size()) return out;
        }
      }
    }
  }
  return out;
}

std::uint64_t GroupTables::size_of(const std::vector<bool>& mask) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) s += classes_[i].size;
  return s;
}

std::vector<Sl2Elem> power_set(std::uint32_t q, std::uint64_t r,
                               std::uint32_t cap) {
  const PrimeField F(q);
  if (q > cap)
    throw CapExceeded("group enumeration capped at q <= " + std::to_string(cap));
  std::vector<Sl2Elem> out;
  for (const Sl2Elem& g : enumerate_sl2(F)) out.push_back(g.pow(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ImageReport word_image(const GroupTables& G, const WordSpec& w,
                       bool use_shortcut) {
  ImageReport rep;
  rep.q = G.field().order();
  rep.word = w;
  rep.group_size = G.order();

  std::vector<bool> image = G.power_classes(w.exponents.front());
  for (std::size_t i = 1; i < w.exponents.size(); ++i) {
    const std::vector<bool> next = G.power_classes(w.exponents[i]);
    if (use_shortcut && G.size_of(image) + G.size_of(next) > rep.group_size) {
      image.assign(image.size(), true);
      rep.decided_by_shortcut = true;
      break;
    }
    image = G.product(image, next);
  }

  rep.image_size = G.size_of(image);
  rep.surjective = rep.image_size == rep.group_size;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (!image[i]) rep.missing.push_back(G.classes()[i]);
  return rep;
}

ImageReport word_image(std::uint32_t q, const WordSpec& w,
                       const WordOptions& opts) {
  return word_image(GroupTables(q, opts.cap), w, opts.use_shortcut);
}

std::vector<SuiteClaim> verify_surjectivity_suite(std::uint32_t qmax,
                                                  std::uint64_t max_prime,
                                                  std::uint32_t cap) {
  if (qmax > cap)
    throw CapExceeded("surjectivity suite capped at q <= " + std::to_string(cap));
  std::vector<SuiteClaim> claims;
  auto word_name = [](const WordSpec& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.exponents.size(); ++i)
      os << (i ? " " : "") << "X" << i + 1 << "^" << w.exponents[i];
    return os.str();
  };
  for (std::uint32_t q = 3; q <= qmax; q += 2) {
    if (!is_prime(q)) continue;
    const GroupTables G(q, cap);
    auto surj = [&](std::vector<std::uint64_t> exps, bool expected) {
      const WordSpec w(std::move(exps));
      claims.push_back({word_name(w) + " surjective", q, expected,
                        word_image(G, w).surjective});
    };

    surj({2, 2}, true);
    surj({3, 3}, q != 3);

    const ImageReport four = word_image(G, WordSpec({4, 4}), false);
    const bool only_minus_one =
        four.missing.size() == 1 && four.missing.front().type == ClassType{Central{-1}};
    const bool bad_residue = q % 8 == 3 || q % 8 == 5;
    claims.push_back({"X1^4 X2^4 image is G minus {-1}", q, bad_residue, only_minus_one});
    claims.push_back({"X1^4 X2^4 surjective", q, !bad_residue, four.surjective});
    surj({4, 4, 4}, true);

    for (std::uint64_t m = 3; m <= max_prime; m += 2) {
      if (!is_prime(m)) continue;
      for (std::uint64_t n = m; n <= max_prime; n += 2) {
        if (!is_prime(n)) continue;
        surj({m, n}, !(m == 3 && n == 3 && q == 3));
      }
    }
    for (std::uint64_t n = 3; n + 1 < q; n += 2)
      if (is_prime(n) && q % n != 0) surj({2, n}, true);

    if (q == 3)
      for (std::size_t len = 1; len <= 4; ++len)
        if (len != 2) surj(std::vector<std::uint64_t>(len, 3), false);  // (3,3) above
  }
  return claims;
}

std::vector<Borel> borel_power_set(std::uint32_t q, std::uint64_t r) {
  const PrimeField F(q);
  std::vector<Borel> out;
  for (const FieldElem a : F.units())
    for (const FieldElem t : F.elements())
      out.push_back(std::get<Borel>(power_bruhat(Borel{a, t}, r)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t borel_word_image_size(std::uint32_t q, const WordSpec& w) {
  const std::size_t Q = q;
  auto index = [Q](const Borel& b) {
    return std::size_t{b.alpha.value()} * Q + b.psi.value();
  };
  std::vector<Borel> image = borel_power_set(q, w.exponents.front());
  for (std::size_t i = 1; i < w.exponents.size(); ++i) {
    const std::vector<Borel> next = borel_power_set(q, w.exponents[i]);
    std::vector<bool> seen(Q * Q, false);
    std::vector<Borel> prod;
    for (const Borel& x : image) {
      for (const Borel& y : next) {
        const auto z = std::get<Borel>(mul(x, y));
        if (!seen[index(z)]) {
          seen[index(z)] = true;
          prod.push_back(z);
        }
      }
    }
    image = std::move(prod);
  }
  return image.size();
}

}  // namespace sl2roots
