#include "ulrich/sing.hpp"

#include <algorithm>

#include "ulrich/cohomology.hpp"

namespace ulrich {

std::optional<std::int64_t> AffineForm::evaluate(const Weight& omega) const {
  if (omega.rank() != static_cast<int>(scaled.size()))
    throw std::invalid_argument("evaluate: rank mismatch");
  std::int64_t num = 0;
  for (std::size_t j = 0; j < scaled.size(); ++j) num += scaled[j] * (omega.coeffs[j] + 1);
  if (num % denom != 0) return std::nullopt;
  return num / denom;
}

std::vector<AffineForm> sing_forms(const RootSystem& rs, int k) {
  std::vector<AffineForm> forms;
  for (auto& cv : rs.radical_coroots(k)) {
    AffineForm f;
    f.scaled = cv.coords;
    f.denom = cv.coords[k - 1];
    if (f.denom <= 0) throw internal_error("radical coroot with nonpositive k-coordinate");
    f.multipliers.reserve(cv.coords.size());
    long long csum = 0;
    for (auto m : cv.coords) {
      f.multipliers.emplace_back(m, f.denom);
      csum += m;
    }
    f.constant = Rational(csum, f.denom);
    f.coroot = std::move(cv);
    forms.push_back(std::move(f));
  }
  std::sort(forms.begin(), forms.end(), [](const AffineForm& a, const AffineForm& b) {
    if (a.constant != b.constant) return a.constant < b.constant;
    return std::lexicographical_compare(a.multipliers.begin(), a.multipliers.end(),
                                        b.multipliers.begin(), b.multipliers.end());
  });
  return forms;
}

SingSet sing_set(const RootSystem& rs, int k, const Weight& omega) {
  if (omega.rank() != rs.rank()) throw std::invalid_argument("sing_set: rank mismatch");
  if (!is_l_dominant(omega, k)) throw std::invalid_argument("weight is not L-dominant");
  SingSet out;
  for (const auto& f : sing_forms(rs, k))
    if (auto t = f.evaluate(omega)) out.values.push_back(*t);
  std::sort(out.values.begin(), out.values.end());
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  return out;
}

std::string coefficient_name(int j, int rank) {
  if (rank <= 26) return std::string(1, static_cast<char>('a' + j));
  return "x" + std::to_string(j + 1);
}

namespace {

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

std::string render(const AffineForm& form, bool latex) {
  const int n = static_cast<int>(form.multipliers.size());
  std::string out;
  for (int j = 0; j < n; ++j) {
    const Rational& q = form.multipliers[j];
    // Mixed rational-integer comparisons recurse under C++20 with this
    // Boost version; compare numerators or like types only.
    if (q.numerator() == 0) continue;
    if (!out.empty()) out += " + ";
    if (q != Rational(1)) {
      if (q.denominator() == 1)
        out += std::to_string(q.numerator());
      else if (latex)
        out += "\\frac{" + std::to_string(q.numerator()) + "}{" +
               std::to_string(q.denominator()) + "}";
      else
        out += "(" + rational_str(q) + ")";
    }
    out += coefficient_name(j, n);
  }
  if (!out.empty()) out += " + ";
  if (latex && form.constant.denominator() != 1)
    out += "\\frac{" + std::to_string(form.constant.numerator()) + "}{" +
           std::to_string(form.constant.denominator()) + "}";
  else
    out += rational_str(form.constant);
  return out;
}

}  // namespace

std::string form_to_text(const AffineForm& form) { return render(form, false); }

std::string form_to_latex(const AffineForm& form) { return render(form, true); }

}  // namespace ulrich
