#include "qfw/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace qfw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitViolation: return "UnitViolation";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::ModuleLaw: return "ModuleLawViolation";
    case ErrorKind::ActionsDoNotCommute: return "ActionsDoNotCommute";
    case ErrorKind::CharTooSmall: return "CharTooSmall";
    case ErrorKind::NotProjectiveAtStage: return "NotProjectiveAtStage";
    case ErrorKind::NotBimoduleMap: return "NotBimoduleMap";
    case ErrorKind::NotCoassociative: return "NotCoassociative";
    case ErrorKind::CounitFails: return "CounitFails";
    case ErrorKind::NotFgpOverBase: return "NotFgpOverBase";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<Scalar>(p)) {
  if (p < 3 || p >= (1u << 16) || !is_prime(p))
    throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) +
                                             " is not an odd prime below 65536");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  std::uint64_t r = 1, b = a % p_;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Scalar>(r);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorKind::Usage, "inverse of zero");
  return pow(a, p_ - 2);
}

Scalar PrimeField::reduce(std::int64_t v) const {
  auto r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

// ---------------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::Usage, "entry count does not match shape");
  for (auto& x : data_)
    if (x >= p) throw Error(ErrorKind::Usage, "matrix entry outside [0, p)");
}

Mat Mat::identity(std::size_t n, Scalar p) {
  Mat m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::column(const Vec& v, Scalar p) { return Mat(v.size(), 1, p, v); }

Mat Mat::from_columns(std::span<const Vec> cols, std::size_t rows, Scalar p) {
  Mat m(rows, cols.size(), p);
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorKind::Usage, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Usage, "matrix product shape mismatch");
  if (p_ != o.p_) throw Error(ErrorKind::Usage, "matrix product over different fields");
  Mat out(rows_, o.cols_, p_);
  std::vector<std::uint64_t> acc(o.cols_);
  // Residues are < 2^16, so up to 2^32 products can be summed before reduction.
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const Scalar* orow = o.data_.data() + k * o.cols_;
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] += a * orow[c];
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = static_cast<Scalar>(acc[c] % p_);
  }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error(ErrorKind::Usage, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Scalar* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(row[c]) * v[c];
    out[r] = static_cast<Scalar>(acc % p_);
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out = *this;
  return out.add_scaled(o, 1);
}

Mat Mat::operator-(const Mat& o) const {
  Mat out = *this;
  return out.add_scaled(o, p_ - 1);
}

Mat Mat::scaled(Scalar s) const {
  Mat out(rows_, cols_, p_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<Scalar>(static_cast<std::uint64_t>(data_[i]) * s % p_);
  return out;
}

Mat& Mat::add_scaled(const Mat& o, Scalar s) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw Error(ErrorKind::Usage, "matrix sum shape mismatch");
  if (s == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = static_cast<Scalar>((data_[i] + static_cast<std::uint64_t>(o.data_[i]) * s) % p_);
  return *this;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::Usage, "block out of range");
  Mat b(nr, nc, p_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::Usage, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

std::string Mat::debug_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " mod " << p_ << " [";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
  auto f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar s = a(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
    }
  return out;
}

Mat hstack(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::Usage, "hstack of nothing");
  std::size_t cols = 0;
  for (auto& b : blocks) cols += b.cols();
  Mat out(blocks[0].rows(), cols, blocks[0].modulus());
  std::size_t c = 0;
  for (auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

Mat vstack(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::Usage, "vstack of nothing");
  std::size_t rows = 0;
  for (auto& b : blocks) rows += b.rows();
  Mat out(rows, blocks[0].cols(), blocks[0].modulus());
  std::size_t r = 0;
  for (auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

Mat block_diag(std::span<const Mat> blocks) {
  if (blocks.empty()) throw Error(ErrorKind::Usage, "block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (auto& b : blocks) rows += b.rows(), cols += b.cols();
  Mat out(rows, cols, blocks[0].modulus());
  std::size_t r = 0, c = 0;
  for (auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Vec vectorize(const Mat& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) v[c * m.rows() + r] = m(r, c);
  return v;
}

Mat unvectorize(const Vec& v, std::size_t rows, std::size_t cols, Scalar p) {
  if (v.size() != rows * cols) throw Error(ErrorKind::Usage, "unvectorize length mismatch");
  Mat m(rows, cols, p);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[c * rows + r];
  return m;
}

Vec vec_add(const Vec& a, const Vec& b, Scalar p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

Vec vec_scaled(const Vec& a, Scalar s, Scalar p) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<Scalar>(static_cast<std::uint64_t>(a[i]) * s % p);
  return out;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; });
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan on a row-major buffer. Returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<Scalar>& a, std::size_t rows, std::size_t cols,
                                      Scalar p, std::size_t col_limit) {
  PrimeField f(p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    Scalar* prow = a.data() + r * cols;
    Scalar s = f.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = f.mul(prow[j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar* row = a.data() + i * cols;
      Scalar m = row[c];
      if (m == 0) continue;
      std::uint64_t nm = p - m;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = static_cast<Scalar>((row[j] + nm * prow[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rref rref(const Mat& m) {
  std::vector<Scalar> buf = m.data();
  auto piv = gauss_jordan(buf, m.rows(), m.cols(), m.modulus(), m.cols());
  Rref out{Mat(m.rows(), m.cols(), m.modulus(), std::move(buf)), piv, piv.size()};
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::Usage, "solve_right: row count mismatch");
  std::size_t n = a.cols(), k = b.cols(), cols = n + k;
  std::vector<Scalar> buf(a.rows() * cols);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) buf[r * cols + c] = a(r, c);
    for (std::size_t c = 0; c < k; ++c) buf[r * cols + n + c] = b(r, c);
  }
  auto piv = gauss_jordan(buf, a.rows(), cols, a.modulus(), n);
  for (std::size_t r = piv.size(); r < a.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (buf[r * cols + n + c] != 0) return std::nullopt;
  Mat x(n, k, a.modulus());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < k; ++c) x(piv[i], c) = buf[i * cols + n + c];
  return x;
}

std::vector<Vec> nullspace(const Mat& a) {
  auto rr = rref(a);
  Scalar p = a.modulus();
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : rr.pivots) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t fcol = 0; fcol < a.cols(); ++fcol) {
    if (is_piv[fcol]) continue;
    Vec v(a.cols(), 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) {
      Scalar x = rr.reduced(i, fcol);
      v[rr.pivots[i]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> invert(const Mat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Usage, "invert: matrix is not square");
  auto x = solve_right(a, Mat::identity(a.rows(), a.modulus()));
  if (!x || !(a * *x).is_identity()) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------

Coordinates::Coordinates(std::span<const Vec> basis, std::size_t len, Scalar p)
    : size_(basis.size()), len_(len), p_(p) {
  if (size_ == 0) return;
  basis_ = Mat::from_columns(basis, len, p);
  auto rr = rref(basis_.transpose());
  if (rr.rank != size_) throw Error(ErrorKind::Usage, "Coordinates: family is dependent");
  rows_ = rr.pivots;
  Mat sel(size_, size_, p);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) sel(i, j) = basis_(rows_[i], j);
  select_inv_ = *invert(sel);
}

Vec Coordinates::operator()(const Vec& v) const {
  if (v.size() != len_) throw Error(ErrorKind::Usage, "Coordinates: length mismatch");
  if (size_ == 0) return {};
  Vec sub(size_);
  for (std::size_t i = 0; i < size_; ++i) sub[i] = v[rows_[i]];
  return select_inv_ * sub;
}

bool Coordinates::contains(const Vec& v) const {
  if (size_ == 0) return vec_is_zero(v);
  return basis_ * (*this)(v) == v;
}

Quotient::Quotient(const Mat& gens, std::size_t n, Scalar p) : n_(n), p_(p) {
  if (gens.rows() > 0 && gens.cols() != n) throw Error(ErrorKind::Usage, "Quotient: width mismatch");
  if (gens.rows() == 0) {
    basis_ = Mat(0, n, p);
  } else {
    auto rr = rref(gens);
    basis_ = rr.reduced.block(0, 0, rr.rank, n);
    pivots_ = rr.pivots;
  }
  std::vector<bool> is_piv(n, false);
  for (auto c : pivots_) is_piv[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c]) free_.push_back(c);
}

Vec Quotient::project(const Vec& v) const {
  // v - sum v[pivot_i] * row_i has zeros on pivots; read off the free entries.
  Vec w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar s = w[pivots_[i]];
    if (s == 0) continue;
    std::uint64_t ns = p_ - s;
    auto row = basis_.row(i);
    for (std::size_t c = 0; c < n_; ++c)
      if (row[c]) w[c] = static_cast<Scalar>((w[c] + ns * row[c]) % p_);
  }
  Vec out(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) out[i] = w[free_[i]];
  return out;
}

Mat Quotient::projection() const {
  // Pivot column i projects to minus row i on the free coordinates (rref rows
  // vanish on the other pivots); free columns project to unit vectors.
  Mat out(dim(), n_, p_);
  for (std::size_t j = 0; j < free_.size(); ++j) out(j, free_[j]) = 1;
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    for (std::size_t j = 0; j < free_.size(); ++j) {
      Scalar x = basis_(i, free_[j]);
      out(j, pivots_[i]) = x == 0 ? 0 : p_ - x;
    }
  return out;
}

Mat Quotient::section() const {
  Mat out(n_, dim(), p_);
  for (std::size_t i = 0; i < free_.size(); ++i) out(free_[i], i) = 1;
  return out;
}

}  // namespace qfw
