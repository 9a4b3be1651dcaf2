#include "jtube/jalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jtube/errors.h"

namespace jtube {
namespace jalg {

namespace {

using cd = std::complex<double>;
const double kSqrt2 = std::sqrt(2.0);

// Pfaffian of a complex skew-symmetric matrix by pivoted Parlett-Reid
// elimination. The argument is consumed.
cd Pfaffian(Eigen::MatrixXcd a) {
  const int n = static_cast<int>(a.rows());
  if (n % 2 == 1) return 0.0;
  cd pf = 1.0;
  for (int k = 0; k < n - 1; k += 2) {
    int kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        kp = i;
      }
    }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const int m = n - k - 2;
      Eigen::VectorXcd tau = a.row(k).segment(k + 2, m).transpose() / a(k, k + 1);
      Eigen::VectorXcd col = a.col(k + 1).segment(k + 2, m);
      a.block(k + 2, k + 2, m, m) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

// Omega = blockdiag([[0, 1], [-1, 0]]); the quaternionic structure map is
// v -> Omega * conj(v).
Eigen::MatrixXcd Omega(int r) {
  Eigen::MatrixXcd om = Eigen::MatrixXcd::Zero(2 * r, 2 * r);
  for (int i = 0; i < r; ++i) {
    om(2 * i, 2 * i + 1) = 1.0;
    om(2 * i + 1, 2 * i) = -1.0;
  }
  return om;
}

// Sorts (value, idempotent) pairs by descending value; within clusters of
// numerically equal values, lexicographically descending on coordinates.
void CanonicalOrder(Eigen::VectorXd* values, std::vector<Element>* frame, double scale) {
  const int r = static_cast<int>(values->size());
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return (*values)(a) > (*values)(b); });
  auto lex_greater = [&](int a, int b) {
    const Element& ca = (*frame)[a];
    const Element& cb = (*frame)[b];
    for (int i = 0; i < ca.size(); ++i) {
      if (std::abs(ca(i) - cb(i)) > 1e-12) return ca(i) > cb(i);
    }
    return false;
  };
  const double cluster_tol = 1e-10 * std::max(1.0, scale);
  int start = 0;
  while (start < r) {
    int end = start + 1;
    while (end < r && (*values)(idx[end - 1]) - (*values)(idx[end]) <= cluster_tol) ++end;
    std::stable_sort(idx.begin() + start, idx.begin() + end, lex_greater);
    start = end;
  }
  Eigen::VectorXd sorted(r);
  std::vector<Element> sorted_frame;
  sorted_frame.reserve(r);
  for (int i = 0; i < r; ++i) {
    sorted(i) = (*values)(idx[i]);
    sorted_frame.push_back((*frame)[idx[i]]);
  }
  *values = sorted;
  *frame = std::move(sorted_frame);
}

}  // namespace

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kSymReal: return "sym";
    case Family::kHermComplex: return "herm";
    case Family::kHermQuaternion: return "quat";
    case Family::kMinkowski: return "mink";
    case Family::kHermOctonion: return "octonion";
  }
  return "unknown";
}

Family ParseFamily(const std::string& name) {
  if (name == "sym" || name == "SymReal") return Family::kSymReal;
  if (name == "herm" || name == "HermComplex") return Family::kHermComplex;
  if (name == "quat" || name == "HermQuaternion") return Family::kHermQuaternion;
  if (name == "mink" || name == "Minkowski") return Family::kMinkowski;
  if (name == "octonion" || name == "oct" || name == "HermOctonion") return Family::kHermOctonion;
  throw ValidationError("unknown algebra family '" + name + "'");
}

AlgebraDescriptor MakeDescriptor(Family family, int size) {
  AlgebraDescriptor d;
  d.family = family;
  switch (family) {
    case Family::kSymReal:
    case Family::kHermComplex:
    case Family::kHermQuaternion:
      if (size < 1) throw ValidationError("rank must be >= 1, got " + std::to_string(size));
      d.rank = size;
      d.pierce_dim = family == Family::kSymReal ? 1 : family == Family::kHermComplex ? 2 : 4;
      d.dim = d.rank + d.rank * (d.rank - 1) / 2 * d.pierce_dim;
      return d;
    case Family::kMinkowski:
      if (size == 2) {
        throw ValidationError("Minkowski algebra of dimension 2 (d = 0) is not simple");
      }
      if (size < 3) throw ValidationError("Minkowski dimension must be >= 3, got " + std::to_string(size));
      d.rank = 2;
      d.pierce_dim = size - 2;
      d.dim = size;
      return d;
    case Family::kHermOctonion:
      if (size != 3) {
        throw ValidationError("octonion family is only available as Herm_3(O), got rank " +
                              std::to_string(size));
      }
      d.rank = 3;
      d.pierce_dim = 8;
      d.dim = 27;
      return d;
  }
  throw ValidationError("unknown family");
}

std::string ConePositionName(ConePosition p) {
  switch (p) {
    case ConePosition::kInterior: return "interior";
    case ConePosition::kBoundary: return "boundary";
    case ConePosition::kOutside: return "outside";
  }
  return "unknown";
}

JordanAlgebra JordanAlgebra::Make(Family family, int size) {
  if (family == Family::kHermOctonion) {
    throw UnsupportedAlgebraError(
        "exceptional algebra Herm_3(O) unsupported: no associative matrix model "
        "(formula-only mode is available for support reports)");
  }
  return JordanAlgebra(MakeDescriptor(family, size));
}

JordanAlgebra::JordanAlgebra(const AlgebraDescriptor& descriptor) : desc_(descriptor) {
  if (desc_.formula_only()) {
    throw UnsupportedAlgebraError("exceptional algebra Herm_3(O) unsupported for element arithmetic");
  }
}

int JordanAlgebra::matrix_size() const {
  return desc_.family == Family::kHermQuaternion ? 2 * desc_.rank : desc_.rank;
}

int JordanAlgebra::OffsetOf(int i, int j) const {
  const int r = desc_.rank;
  const int pair = i * (2 * r - i - 1) / 2 + (j - i - 1);
  return r + desc_.pierce_dim * pair;
}

void JordanAlgebra::CheckElement(const Element& x) const {
  if (x.size() != desc_.dim) {
    throw ValidationError("element has " + std::to_string(x.size()) + " coordinates, algebra " +
                          FamilyName(desc_.family) + " expects " + std::to_string(desc_.dim));
  }
  if (!x.allFinite()) throw ValidationError("element has non-finite coordinates");
}

void JordanAlgebra::CheckElement(const ComplexElement& z) const {
  if (z.size() != desc_.dim) {
    throw ValidationError("complex element has " + std::to_string(z.size()) +
                          " coordinates, expected " + std::to_string(desc_.dim));
  }
  if (!z.allFinite()) throw ValidationError("complex element has non-finite coordinates");
}

Element JordanAlgebra::Unit() const {
  Element e = Element::Zero(desc_.dim);
  if (desc_.family == Family::kMinkowski) {
    e(0) = 1.0;
  } else {
    e.head(desc_.rank).setOnes();
  }
  return e;
}

std::vector<Element> JordanAlgebra::CanonicalFrame() const {
  std::vector<Element> frame;
  if (desc_.family == Family::kMinkowski) {
    Element c1 = Element::Zero(desc_.dim), c2 = Element::Zero(desc_.dim);
    c1(0) = c2(0) = 0.5;
    c1(1) = 0.5;
    c2(1) = -0.5;
    frame = {c1, c2};
    return frame;
  }
  for (int j = 0; j < desc_.rank; ++j) {
    Element c = Element::Zero(desc_.dim);
    c(j) = 1.0;
    frame.push_back(c);
  }
  return frame;
}

void JordanAlgebra::Fill(const Eigen::VectorXd& x, Eigen::MatrixXcd* m) const {
  const int r = desc_.rank;
  const bool quat = desc_.family == Family::kHermQuaternion;
  m->setZero(matrix_size(), matrix_size());
  for (int i = 0; i < r; ++i) {
    if (quat) {
      (*m)(2 * i, 2 * i) = x(i);
      (*m)(2 * i + 1, 2 * i + 1) = x(i);
    } else {
      (*m)(i, i) = x(i);
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int o = OffsetOf(i, j);
      switch (desc_.family) {
        case Family::kSymReal:
          (*m)(i, j) = (*m)(j, i) = x(o) / kSqrt2;
          break;
        case Family::kHermComplex: {
          cd v(x(o) / kSqrt2, x(o + 1) / kSqrt2);
          (*m)(i, j) = v;
          (*m)(j, i) = std::conj(v);
          break;
        }
        case Family::kHermQuaternion: {
          cd alpha(x(o) / kSqrt2, x(o + 1) / kSqrt2);
          cd beta(x(o + 2) / kSqrt2, x(o + 3) / kSqrt2);
          Eigen::Matrix2cd block;
          block << alpha, beta, -std::conj(beta), std::conj(alpha);
          m->block<2, 2>(2 * i, 2 * j) = block;
          m->block<2, 2>(2 * j, 2 * i) = block.adjoint();
          break;
        }
        default:
          break;
      }
    }
  }
}

Eigen::MatrixXcd JordanAlgebra::ToMatrix(const Element& x) const {
  if (!is_matrix_family()) throw ValidationError("Minkowski algebra has no matrix model here");
  CheckElement(x);
  Eigen::MatrixXcd m;
  Fill(x, &m);
  return m;
}

Eigen::MatrixXcd JordanAlgebra::ToMatrix(const ComplexElement& z) const {
  if (!is_matrix_family()) throw ValidationError("Minkowski algebra has no matrix model here");
  CheckElement(z);
  Eigen::MatrixXcd re, im;
  Fill(z.real(), &re);
  Fill(z.imag(), &im);
  return re + cd(0.0, 1.0) * im;
}

Element JordanAlgebra::FromMatrix(const Eigen::MatrixXcd& m) const {
  if (!is_matrix_family()) throw ValidationError("Minkowski algebra has no matrix model here");
  if (m.rows() != matrix_size() || m.cols() != matrix_size()) {
    throw ValidationError("matrix has wrong size for this algebra");
  }
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  const int r = desc_.rank;
  Element x(desc_.dim);
  const bool quat = desc_.family == Family::kHermQuaternion;
  for (int i = 0; i < r; ++i) {
    x(i) = quat ? 0.5 * (h(2 * i, 2 * i).real() + h(2 * i + 1, 2 * i + 1).real()) : h(i, i).real();
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int o = OffsetOf(i, j);
      switch (desc_.family) {
        case Family::kSymReal:
          x(o) = kSqrt2 * h(i, j).real();
          break;
        case Family::kHermComplex:
          x(o) = kSqrt2 * h(i, j).real();
          x(o + 1) = kSqrt2 * h(i, j).imag();
          break;
        case Family::kHermQuaternion: {
          cd alpha = 0.5 * (h(2 * i, 2 * j) + std::conj(h(2 * i + 1, 2 * j + 1)));
          cd beta = 0.5 * (h(2 * i, 2 * j + 1) - std::conj(h(2 * i + 1, 2 * j)));
          x(o) = kSqrt2 * alpha.real();
          x(o + 1) = kSqrt2 * alpha.imag();
          x(o + 2) = kSqrt2 * beta.real();
          x(o + 3) = kSqrt2 * beta.imag();
          break;
        }
        default:
          break;
      }
    }
  }
  return x;
}

Element JordanAlgebra::Product(const Element& x, const Element& y) const {
  CheckElement(x);
  CheckElement(y);
  if (desc_.family == Family::kMinkowski) {
    const int n = desc_.dim;
    Element p(n);
    p(0) = x.dot(y);
    p.tail(n - 1) = x(0) * y.tail(n - 1) + y(0) * x.tail(n - 1);
    return p;
  }
  if (desc_.family == Family::kSymReal) {
    const Eigen::MatrixXd a = ToMatrix(x).real(), b = ToMatrix(y).real();
    const Eigen::MatrixXd p = 0.5 * (a * b + b * a);
    return FromMatrix(p.cast<cd>());
  }
  const Eigen::MatrixXcd a = ToMatrix(x), b = ToMatrix(y);
  return FromMatrix(0.5 * (a * b + b * a));
}

Operator JordanAlgebra::LeftMult(const Element& x) const {
  CheckElement(x);
  const int n = desc_.dim;
  Operator l(n, n);
  if (desc_.family == Family::kMinkowski) {
    l.setZero();
    l(0, 0) = x(0);
    l.block(0, 1, 1, n - 1) = x.tail(n - 1).transpose();
    l.block(1, 0, n - 1, 1) = x.tail(n - 1);
    l.block(1, 1, n - 1, n - 1).diagonal().setConstant(x(0));
    return l;
  }
  for (int j = 0; j < n; ++j) {
    l.col(j) = Product(x, Element::Unit(n, j));
  }
  return l;
}

Operator JordanAlgebra::QuadRep(const Element& x) const {
  const Operator l = LeftMult(x);
  return 2.0 * l * l - LeftMult(Product(x, x));
}

double JordanAlgebra::Det(const Element& x) const {
  CheckElement(x);
  if (desc_.family == Family::kMinkowski) {
    return x(0) * x(0) - x.tail(desc_.dim - 1).squaredNorm();
  }
  if (desc_.family == Family::kSymReal) {
    return ToMatrix(x).real().partialPivLu().determinant();
  }
  return Det(ComplexElement(x.cast<cd>())).real();
}

std::complex<double> JordanAlgebra::Det(const ComplexElement& z) const {
  CheckElement(z);
  if (desc_.family == Family::kMinkowski) {
    cd v = z(0) * z(0);
    for (int i = 1; i < desc_.dim; ++i) v -= z(i) * z(i);
    return v;
  }
  const Eigen::MatrixXcd m = ToMatrix(z);
  if (desc_.family == Family::kHermQuaternion) {
    return Pfaffian(Omega(desc_.rank) * m);
  }
  return m.partialPivLu().determinant();
}

SpectralData JordanAlgebra::SpectralMinkowski(const Element& x, double tol) const {
  const int n = desc_.dim;
  const double norm = x.tail(n - 1).norm();
  Element u = Element::Zero(n - 1);
  if (norm > 0.0) {
    u = x.tail(n - 1) / norm;
  } else {
    u(0) = 1.0;
  }
  SpectralData sd;
  sd.values.resize(2);
  sd.values << x(0) + norm, x(0) - norm;
  for (double sign : {1.0, -1.0}) {
    Element c(n);
    c(0) = 0.5;
    c.tail(n - 1) = 0.5 * sign * u;
    sd.frame.push_back(c);
  }
  sd.tolerance = tol;
  return sd;
}

SpectralData JordanAlgebra::SpectralMatrix(const Element& x, double tol) const {
  SpectralData sd;
  sd.tolerance = tol;
  const int r = desc_.rank;
  if (desc_.family == Family::kSymReal) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ToMatrix(x).real());
    if (es.info() != Eigen::Success) throw NumericError("symmetric eigensolver failed", -1.0);
    sd.values = es.eigenvalues().reverse();
    for (int j = r - 1; j >= 0; --j) {
      const Eigen::VectorXd v = es.eigenvectors().col(j);
      sd.frame.push_back(FromMatrix((v * v.transpose()).cast<cd>()));
    }
    return sd;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ToMatrix(x));
  if (es.info() != Eigen::Success) throw NumericError("hermitian eigensolver failed", -1.0);
  const int m = matrix_size();
  if (desc_.family == Family::kHermComplex) {
    sd.values = es.eigenvalues().reverse();
    for (int j = m - 1; j >= 0; --j) {
      const Eigen::VectorXcd v = es.eigenvectors().col(j);
      sd.frame.push_back(FromMatrix(v * v.adjoint()));
    }
    return sd;
  }
  // Quaternion: every Jordan value appears twice in the embedding; pair each
  // new eigenvector v with its partner Omega * conj(v).
  const Eigen::MatrixXcd om = Omega(r);
  const Eigen::MatrixXcd xm = ToMatrix(x);
  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> values;
  for (int j = m - 1; j >= 0 && static_cast<int>(values.size()) < r; --j) {
    Eigen::VectorXcd v = es.eigenvectors().col(j);
    for (const auto& b : basis) v -= b * b.dot(v);
    const double nv = v.norm();
    if (nv < 0.5) continue;
    v /= nv;
    Eigen::VectorXcd w = om * v.conjugate();
    w -= v * v.dot(w);
    w.normalize();
    basis.push_back(v);
    basis.push_back(w);
    values.push_back(0.5 * (v.dot(xm * v).real() + w.dot(xm * w).real()));
    sd.frame.push_back(FromMatrix(v * v.adjoint() + w * w.adjoint()));
  }
  if (static_cast<int>(values.size()) != r) {
    throw NumericError("quaternionic eigenvector pairing failed", static_cast<double>(values.size()));
  }
  sd.values = Eigen::Map<Eigen::VectorXd>(values.data(), r);
  return sd;
}

SpectralData JordanAlgebra::Spectral(const Element& x, double tol) const {
  CheckElement(x);
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  SpectralData sd = desc_.family == Family::kMinkowski ? SpectralMinkowski(x, tol) : SpectralMatrix(x, tol);
  const double scale = std::max(1.0, sd.values.cwiseAbs().maxCoeff());
  CanonicalOrder(&sd.values, &sd.frame, scale);
  Element recon = Element::Zero(desc_.dim);
  for (int j = 0; j < desc_.rank; ++j) recon += sd.values(j) * sd.frame[j];
  sd.residual = (x - recon).norm();
  sd.zero_threshold = tol * scale;
  if (sd.residual > 1e-8 * scale) {
    throw NumericError("spectral reconstruction failed", sd.residual);
  }
  return sd;
}

Eigen::VectorXd JordanAlgebra::SpectralValues(const Element& x) const {
  CheckElement(x);
  if (desc_.family == Family::kMinkowski) {
    const double norm = x.tail(desc_.dim - 1).norm();
    Eigen::VectorXd v(2);
    v << x(0) + norm, x(0) - norm;
    return v;
  }
  if (desc_.family == Family::kSymReal) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ToMatrix(x).real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().reverse();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ToMatrix(x), Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  if (desc_.family == Family::kHermComplex) return ev;
  Eigen::VectorXd v(desc_.rank);
  for (int j = 0; j < desc_.rank; ++j) v(j) = 0.5 * (ev(2 * j) + ev(2 * j + 1));
  return v;
}

namespace {

Classification FromSpectral(const SpectralData& sd, double zero_threshold, int dim) {
  Classification c;
  c.values = sd.values;
  c.zero_threshold = zero_threshold;
  c.tolerance = zero_threshold / std::max(1.0, sd.values.cwiseAbs().maxCoeff());
  c.det = sd.values.prod();
  c.trace = sd.values.sum();
  c.pos_part = Element::Zero(dim);
  c.neg_part = Element::Zero(dim);
  const int r = static_cast<int>(sd.values.size());
  for (int j = 0; j < r; ++j) {
    const double v = sd.values(j);
    if (v > zero_threshold) {
      ++c.rank;
      ++c.index;
      c.pos_part += v * sd.frame[j];
    } else if (v < -zero_threshold) {
      ++c.rank;
      --c.index;
      c.neg_part -= v * sd.frame[j];
    }
  }
  c.invertible = c.rank == r;
  return c;
}

}  // namespace

Classification JordanAlgebra::ClassifyWithThreshold(const Element& x, double zero_threshold) const {
  return FromSpectral(Spectral(x, 1e-9), zero_threshold, desc_.dim);
}

Classification JordanAlgebra::Classify(const Element& x, double tol) const {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  const SpectralData sd = Spectral(x, tol);
  Classification c = FromSpectral(sd, sd.zero_threshold, desc_.dim);
  c.tolerance = tol;
  return c;
}

ConePosition JordanAlgebra::ConePositionFast(const Element& x, double tol) const {
  const Eigen::VectorXd v = SpectralValues(x);
  const double z = tol * std::max(1.0, v.cwiseAbs().maxCoeff());
  const double lo = v.minCoeff();
  if (lo > z) return ConePosition::kInterior;
  if (lo >= -z) return ConePosition::kBoundary;
  return ConePosition::kOutside;
}

ConePosition JordanAlgebra::ConePositionOf(const Element& x, double tol) const {
  const Eigen::VectorXd v = SpectralValues(x);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(LeftMult(x), Eigen::EigenvaluesOnly);
  const double gap = std::abs(es.eigenvalues().minCoeff() - v.minCoeff());
  if (gap > 1e-8 * scale) {
    throw NumericError("cone test disagrees with positivity of L(x)", gap);
  }
  return ConePositionFast(x, tol);
}

std::vector<std::string> JordanAlgebra::FrameViolations(const std::vector<Element>& frame,
                                                        double tol) const {
  std::vector<std::string> out;
  const int r = desc_.rank;
  if (static_cast<int>(frame.size()) != r) {
    out.push_back("frame has " + std::to_string(frame.size()) + " members, rank is " + std::to_string(r));
    return out;
  }
  for (const auto& c : frame) {
    if (c.size() != desc_.dim) {
      out.push_back("frame member has wrong dimension");
      return out;
    }
  }
  const Element e = Unit();
  const double primitive_trace = Inner(e, e) / r;
  Element sum = Element::Zero(desc_.dim);
  for (int i = 0; i < r; ++i) {
    sum += frame[i];
    const double idem = (Product(frame[i], frame[i]) - frame[i]).norm();
    if (idem > tol) out.push_back("c_" + std::to_string(i + 1) + "^2 != c_" + std::to_string(i + 1));
    if (std::abs(Inner(frame[i], e) - primitive_trace) > tol) {
      out.push_back("c_" + std::to_string(i + 1) + " is not primitive");
    }
    for (int j = i + 1; j < r; ++j) {
      if (Product(frame[i], frame[j]).norm() > tol) {
        out.push_back("c_" + std::to_string(i + 1) + " c_" + std::to_string(j + 1) + " != 0");
      }
    }
  }
  if ((sum - e).norm() > tol) out.push_back("sum of frame != e");
  return out;
}

std::vector<Operator> JordanAlgebra::PierceProjections(const std::vector<Element>& frame) const {
  const auto violations = FrameViolations(frame);
  if (!violations.empty()) {
    std::string msg = "invalid Jordan frame:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
  const int r = desc_.rank;
  std::vector<Operator> l;
  for (const auto& c : frame) l.push_back(LeftMult(c));
  std::vector<Operator> out;
  for (int j = 0; j < r; ++j) out.push_back(2.0 * l[j] * l[j] - l[j]);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) out.push_back(4.0 * l[i] * l[j]);
  }
  return out;
}

}  // namespace jalg
}  // namespace jtube
