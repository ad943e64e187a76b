#include "lts/classify.hpp"

#include "lts/catalog.hpp"
#include "lts/errors.hpp"

namespace lts {

namespace {

class RowSearch {
 public:
  RowSearch(const TripleSystem& a, const TripleSystem& b, const std::vector<Rational>& values, std::size_t& budget,
            std::size_t& tried)
      : a_(a), b_(b), n_(a.dim()), values_(values), budget_(budget), tried_(tried), rows_(n_) {
    // (p,q,r) becomes checkable once rows up to max(p,q,r,s) are known for
    // every s with b(p,q,r,s) != 0.
    ready_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = p + 1; q < n_; ++q)
        for (std::size_t r = 0; r < n_; ++r) {
          std::size_t level = std::max(q, r);
          for (std::size_t s = 0; s < n_; ++s)
            if (!b_.coeff(p, q, r, s).is_zero()) level = std::max(level, s);
          ready_[level].push_back({p, q, r});
        }
  }

  std::optional<Matrix> run() {
    if (place(0)) return Matrix::from_rows(rows_, n_);
    return std::nullopt;
  }

  bool exhausted() const { return out_of_budget_; }

 private:
  bool place(std::size_t d) {
    if (d == n_) return true;
    std::vector<std::size_t> digits(n_, 0);
    const std::size_t base = values_.size();
    while (true) {
      if (tried_ >= budget_) {
        out_of_budget_ = true;
        return false;
      }
      ++tried_;
      Vector row(n_);
      for (std::size_t i = 0; i < n_; ++i) row[i] = values_[digits[i]];
      rows_[d] = row;
      if (consistent(d) && place(d + 1)) return true;
      if (out_of_budget_) return false;
      std::size_t i = n_;
      while (i > 0) {
        --i;
        if (++digits[i] < base) break;
        digits[i] = 0;
        if (i == 0) return false;
      }
    }
  }

  bool consistent(std::size_t d) const {
    std::vector<Vector> chosen(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(d) + 1);
    if (rank(Matrix::from_rows(chosen, n_)) != d + 1) return false;
    for (const auto& [p, q, r] : ready_[d]) {
      Vector lhs = triple_product(a_, rows_[p], rows_[q], rows_[r]);
      for (std::size_t s = 0; s <= d; ++s)
        if (!b_.coeff(p, q, r, s).is_zero()) axpy(lhs, -b_.coeff(p, q, r, s), rows_[s]);
      if (!is_zero(lhs)) return false;
    }
    return true;
  }

  struct Triple {
    std::size_t p, q, r;
  };

  const TripleSystem& a_;
  const TripleSystem& b_;
  std::size_t n_;
  const std::vector<Rational>& values_;
  std::size_t& budget_;
  std::size_t& tried_;
  std::vector<Vector> rows_;
  std::vector<std::vector<Triple>> ready_;
  bool out_of_budget_ = false;
};

void require_lts(const TripleSystem& t) {
  if (auto v = check_axioms(t)) throw InvalidLts(v->describe());
}

}  // namespace

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic:
      return "isomorphic";
    case IsoVerdict::NonIsomorphic:
      return "non-isomorphic";
    case IsoVerdict::Unknown:
      break;
  }
  return "unknown";
}

const std::vector<std::vector<Rational>>& iso_search_stages() {
  static const std::vector<std::vector<Rational>> stages = [] {
    std::vector<Rational> s1 = {0, 1, -1};
    std::vector<Rational> s2 = s1;
    for (Rational x : {Rational(2), Rational(-2), Rational(1, 2), Rational(-1, 2)}) s2.push_back(x);
    std::vector<Rational> s3 = s2;
    for (Rational x : {Rational(3), Rational(-3), Rational(1, 3), Rational(-1, 3), Rational(3, 2), Rational(-3, 2),
                       Rational(2, 3), Rational(-2, 3), Rational(4), Rational(-4), Rational(1, 4), Rational(-1, 4)})
      s3.push_back(x);
    return std::vector<std::vector<Rational>>{s1, s2, s3};
  }();
  return stages;
}

IsoResult isomorphic(const TripleSystem& a, const TripleSystem& b, std::size_t budget) {
  const Fingerprint fa = fingerprint(a);
  const Fingerprint fb = fingerprint(b);
  IsoResult result;
  if (auto field = first_difference(fa, fb)) {
    result.verdict = IsoVerdict::NonIsomorphic;
    result.separator = field;
    return result;
  }
  const std::size_t n = a.dim();
  auto accept = [&](const Matrix& T) {
    if (transform(a, T) != b) return false;
    result.verdict = IsoVerdict::Isomorphic;
    result.witness = T;
    return true;
  };
  if (accept(Matrix::identity(n))) return result;
  for (const auto& values : iso_search_stages()) {
    RowSearch search(a, b, values, budget, result.candidates_tried);
    if (auto T = search.run()) {
      if (accept(*T)) return result;
      throw std::logic_error("isomorphism search produced an invalid witness");
    }
    if (search.exhausted()) break;
  }
  return result;
}

std::vector<std::string> classify(const TripleSystem& t, std::size_t budget) {
  if (t.dim() != 2 && t.dim() != 3)
    throw UnsupportedDimension("classification covers dimensions 2 and 3, got " + std::to_string(t.dim()));
  require_lts(t);
  const Fingerprint f = fingerprint(t);
  std::vector<const catalog::CatalogEntry*> tied;
  for (const auto& e : catalog::all_entries())
    if (e.expected == f) tied.push_back(&e);
  std::vector<std::string> labels;
  if (tied.size() > 1)
    for (const auto* e : tied)
      if (isomorphic(t, e->system, budget).verdict == IsoVerdict::Isomorphic) labels.push_back(e->label);
  if (labels.empty())
    for (const auto* e : tied) labels.push_back(e->label);
  return labels;
}

}  // namespace lts
