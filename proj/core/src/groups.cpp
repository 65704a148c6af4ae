#include "latdyn/groups.hpp"

#include "latdyn/errors.hpp"

#include <algorithm>
#include <cmath>

namespace latdyn {

std::vector<Mat3<Rational>> make_sl3_elementary_set() {
  std::vector<Mat3<Rational>> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        Mat3<Rational> g = Mat3<Rational>::identity();
        g(i, j) = sign;
        out.push_back(g);
      }
    }
  return out;
}

bool check_SL3(const Mat3<double>& g, double tol) { return std::abs(det(g) - 1.0) <= tol; }

bool check_SOQ(const Mat3<double>& g, double tol) {
  if (!check_SL3(g, tol)) return false;
  const Mat3<double> s = quad_form_gram<double>();
  const Mat3<double> r = transpose(g) * s * g;
  for (std::size_t i = 0; i < 9; ++i)
    if (std::abs(r.a[i] - s.a[i]) > tol) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

bool near_equal(const Mat3<double>& a, const Mat3<double>& b) {
  for (std::size_t i = 0; i < 9; ++i)
    if (std::abs(a.a[i] - b.a[i]) > 1e-12 * (1.0 + std::abs(a.a[i]))) return false;
  return true;
}

}  // namespace

MeasureSpec MeasureSpec::rational(std::string name, std::vector<RationalAtom> atoms, bool symmetrize) {
  if (atoms.empty()) throw ValidationError("measure has no atoms");
  for (const auto& a : atoms) {
    if (a.weight <= 0) throw ValidationError("measure weights must be positive");
    if (det(a.g) != 1) throw ValidationError("measure atom '" + a.label + "' does not have determinant 1");
  }
  if (symmetrize) {
    const std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Mat3<Rational> inv = inverse(atoms[i].g);
      const bool present = std::any_of(atoms.begin(), atoms.end(), [&](const RationalAtom& b) { return b.g == inv; });
      if (!present) atoms.push_back({inv, atoms[i].weight, atoms[i].label + "^-1"});
    }
  }
  Rational total = 0;
  for (const auto& a : atoms) total += a.weight;

  MeasureSpec mu;
  mu.name_ = std::move(name);
  mu.rational_ = true;
  for (auto& a : atoms) {
    MeasureAtom m;
    m.exact_weight = Rational(a.weight / total);
    m.weight = m.exact_weight->get_d();
    m.g = cast<double>(a.g);
    m.exact = std::move(a.g);
    m.label = std::move(a.label);
    mu.atoms_.push_back(std::move(m));
  }
  mu.finalize();
  return mu;
}

MeasureSpec MeasureSpec::floating(std::string name, std::vector<FloatAtom> atoms, bool symmetrize) {
  if (atoms.empty()) throw ValidationError("measure has no atoms");
  for (const auto& a : atoms) {
    if (!(a.weight > 0)) throw ValidationError("measure weights must be positive");
    if (!check_SL3(a.g, 1e-9)) throw ValidationError("measure atom '" + a.label + "' does not have determinant 1");
  }
  if (symmetrize) {
    const std::size_t n = atoms.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Mat3<double> inv = inverse(atoms[i].g);
      const bool present =
          std::any_of(atoms.begin(), atoms.end(), [&](const FloatAtom& b) { return near_equal(b.g, inv); });
      if (!present) atoms.push_back({inv, atoms[i].weight, atoms[i].label + "^-1"});
    }
  }
  double total = 0;
  for (const auto& a : atoms) total += a.weight;

  MeasureSpec mu;
  mu.name_ = std::move(name);
  for (auto& a : atoms) {
    MeasureAtom m;
    m.g = a.g;
    m.weight = a.weight / total;
    m.label = std::move(a.label);
    mu.atoms_.push_back(std::move(m));
  }
  mu.finalize();
  double sum = 0;
  for (const auto& a : mu.atoms_) sum += a.weight;
  if (std::abs(sum - 1.0) > 1e-12) throw ValidationError("measure weights do not sum to 1");
  return mu;
}

void MeasureSpec::finalize() {
  cumulative_.clear();
  double acc = 0;
  for (const auto& a : atoms_) {
    acc += a.weight;
    cumulative_.push_back(acc);
  }
  cumulative_.back() = 1.0;

  symmetric_ = true;
  for (const auto& a : atoms_) {
    bool found = false;
    if (rational_) {
      const Mat3<Rational> inv = inverse(*a.exact);
      for (const auto& b : atoms_)
        if (*b.exact == inv && *b.exact_weight == *a.exact_weight) found = true;
    } else {
      const Mat3<double> inv = inverse(a.g);
      for (const auto& b : atoms_)
        if (near_equal(b.g, inv) && std::abs(b.weight - a.weight) <= 1e-15) found = true;
    }
    if (!found) {
      symmetric_ = false;
      break;
    }
  }
}

std::size_t MeasureSpec::sample(Xoshiro256& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), atoms_.size() - 1);
}

MeasureSpec MeasureSpec::conjugated(const Mat3<double>& k) const {
  const Mat3<double> k_inv = inverse(k);
  std::vector<FloatAtom> out;
  for (const auto& a : atoms_) out.push_back({k * a.g * k_inv, a.weight, a.label});
  MeasureSpec mu = floating(name_ + "^k", std::move(out), false);
  mu.case_label_ = case_label_;
  return mu;
}

WordSample sample_word(const MeasureSpec& mu, Xoshiro256& rng, std::size_t n) {
  if (!mu.is_rational()) throw ValidationError("sample_word needs a rational measure");
  WordSample w{Mat3<Rational>::identity(), {}};
  w.letters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = mu.sample(rng);
    w.letters.push_back(k);
    w.product = *mu.atoms()[k].exact * w.product;
  }
  return w;
}

// ---------------------------------------------------------------------------

namespace {

using RA = MeasureSpec::RationalAtom;

MeasureSpec unipotent_measure(const std::string& name, const Rational& tp, const Rational& tm, bool with_k) {
  std::vector<RA> atoms{{make_u_plus(tp), 1, "u+(" + tp.get_str() + ")"},
                        {make_u_minus(tm), 1, "u-(" + tm.get_str() + ")"}};
  if (with_k) atoms.push_back({make_k<Rational>(), 1, "k"});
  MeasureSpec mu = MeasureSpec::rational(name, std::move(atoms), true);
  mu.with_case_label("II");
  return mu;
}

// Rotation by the angle with cosine c, sine s (c² + s² = 1) in the (i, j) plane.
Mat3<Rational> rational_rotation(std::size_t i, std::size_t j, const Rational& c, const Rational& s) {
  Mat3<Rational> r = Mat3<Rational>::identity();
  r(i, i) = c;
  r(j, j) = c;
  r(i, j) = -s;
  r(j, i) = s;
  return r;
}

}  // namespace

MeasureSpec builtin_measure(const std::string& name) {
  if (name == "I") {
    std::vector<RA> atoms;
    const char* idx = "123";
    for (const auto& g : make_sl3_elementary_set()) {
      std::string label = "e";
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j && g(i, j) != 0)
            label += std::string(g(i, j) > 0 ? "+" : "-") + "E" + idx[i] + idx[j];
      atoms.push_back({g, 1, label});
    }
    MeasureSpec mu = MeasureSpec::rational("I", std::move(atoms), true);
    mu.with_case_label("I");
    return mu;
  }
  if (name == "II-a") return unipotent_measure(name, 2, 1, false);
  if (name == "II-b") return unipotent_measure(name, 1, 2, false);
  if (name == "II-c") return unipotent_measure(name, 2, 1, true);
  if (name == "II-d") return unipotent_measure(name, 1, 1, false);
  if (name == "gamma0") return unipotent_measure(name, 2, 2, false);
  if (name == "gamma0k") return unipotent_measure(name, 2, 2, true);
  if (name == "rotations") {
    std::vector<RA> atoms{{rational_rotation(0, 1, Rational(3, 5), Rational(4, 5)), 1, "r12"},
                          {rational_rotation(1, 2, Rational(5, 13), Rational(12, 13)), 1, "r23"},
                          {rational_rotation(0, 2, Rational(8, 17), Rational(15, 17)), 1, "r13"},
                          {rational_rotation(0, 1, Rational(20, 29), Rational(21, 29)), 1, "r12b"}};
    return MeasureSpec::rational(name, std::move(atoms), true);
  }
  throw ValidationError("unknown built-in measure '" + name + "'");
}

std::vector<std::string> builtin_measure_names() {
  return {"I", "II-a", "II-b", "II-c", "II-d", "gamma0", "gamma0k", "rotations"};
}

std::vector<std::string> case_two_measures() { return {"II-a", "II-b", "II-c", "II-d"}; }

}  // namespace latdyn
