#include "braidcover/matrix.hpp"
#include <algorithm>
#include <sstream>

namespace braidcover {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; i++)
    for (int k = 0; k < cols; k++) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; j++) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw PreconditionError("determinant: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; j++) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

struct SmithWork {
  IntMatrix d, u, v;
  int rows, cols;

  void swapRows(int i, int j) {
    for (int c = 0; c < cols; c++) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < rows; c++) std::swap(u.at(i, c), u.at(j, c));
  }
  void swapCols(int i, int j) {
    for (int r = 0; r < rows; r++) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < cols; r++) std::swap(v.at(r, i), v.at(r, j));
  }
  void addRow(int dst, int src, const Int& f) { // row dst += f * row src
    for (int c = 0; c < cols; c++) d.at(dst, c) += f * d.at(src, c);
    for (int c = 0; c < rows; c++) u.at(dst, c) += f * u.at(src, c);
  }
  void addCol(int dst, int src, const Int& f) {
    for (int r = 0; r < rows; r++) d.at(r, dst) += f * d.at(r, src);
    for (int r = 0; r < cols; r++) v.at(r, dst) += f * v.at(r, src);
  }
  void negateRow(int i) {
    for (int c = 0; c < cols; c++) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < rows; c++) u.at(i, c) = -u.at(i, c);
  }
};

} // namespace

SmithResult smithNormalForm(const IntMatrix& m) {
  SmithWork w;
  w.rows = m.rows;
  w.cols = m.cols;
  w.d = m;
  w.u = IntMatrix::identity(m.rows);
  w.v = IntMatrix::identity(m.cols);
  int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; t++) {
    // find a nonzero pivot of least absolute value in the remaining block
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = t; i < m.rows; i++)
      for (int j = t; j < m.cols; j++) {
        Int v = absInt(w.d.at(i, j));
        if (v != 0 && (pr < 0 || v < best)) { best = v; pr = i; pc = j; }
      }
    if (pr < 0) break;
    w.swapRows(t, pr);
    w.swapCols(t, pc);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m.rows; i++) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.addRow(i, t, -q);
        if (w.d.at(i, t) != 0) { w.swapRows(t, i); clean = false; }
      }
      for (int j = t + 1; j < m.cols; j++) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.addCol(j, t, -q);
        if (w.d.at(t, j) != 0) { w.swapCols(t, j); clean = false; }
      }
      if (!clean) continue;
      // ensure pivot divides every remaining entry
      bool fixed = false;
      for (int i = t + 1; i < m.rows && !fixed; i++)
        for (int j = t + 1; j < m.cols && !fixed; j++)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.addRow(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.d.at(t, t) < 0) w.negateRow(t);
  }
  return {w.u, w.d, w.v};
}

Int AbelianGroup::order() const {
  if (freeRank > 0) return 0;
  Int o = 1;
  for (const Int& f : invariantFactors) o *= f;
  return o;
}

std::vector<Int> AbelianGroup::zero() const {
  return std::vector<Int>(invariantFactors.size() + freeRank, Int(0));
}

std::vector<Int> AbelianGroup::reduce(std::vector<Int> v) const {
  for (size_t i = 0; i < invariantFactors.size(); i++) {
    v[i] %= invariantFactors[i];
    if (v[i] < 0) v[i] += invariantFactors[i];
  }
  return v;
}

std::vector<Int> AbelianGroup::add(const std::vector<Int>& x, const std::vector<Int>& y) const {
  std::vector<Int> r(x.size());
  for (size_t i = 0; i < x.size(); i++) r[i] = x[i] + y[i];
  return reduce(std::move(r));
}

std::vector<Int> AbelianGroup::neg(const std::vector<Int>& x) const {
  std::vector<Int> r(x.size());
  for (size_t i = 0; i < x.size(); i++) r[i] = -x[i];
  return reduce(std::move(r));
}

std::vector<Int> AbelianGroup::mul(const std::vector<Int>& x, long k) const {
  std::vector<Int> r(x.size());
  for (size_t i = 0; i < x.size(); i++) r[i] = x[i] * k;
  return reduce(std::move(r));
}

std::vector<std::vector<Int>> AbelianGroup::elements() const {
  if (freeRank > 0) throw PreconditionError("elements: group is infinite");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(invariantFactors.size(), Int(0));
  for (;;) {
    out.push_back(cur);
    int i = (int)cur.size() - 1;
    while (i >= 0) {
      cur[i] += 1;
      if (cur[i] < invariantFactors[i]) break;
      cur[i] = 0;
      i--;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianGroup::render(const std::vector<Int>& x) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < x.size(); i++) {
    if (x[i] == 0) continue;
    if (any) os << " ";
    os << "e" << (i + 1);
    if (x[i] != 1) os << "^" << x[i].str();
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string AbelianGroup::renderGroup() const {
  if (isTrivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Int& f : invariantFactors) {
    if (!first) os << " + ";
    os << "Z/" << f.str();
    first = false;
  }
  for (int i = 0; i < freeRank; i++) {
    if (!first) os << " + ";
    os << "Z";
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
  if (m.rows != m.cols) throw PreconditionError("cokernel: matrix not square");
  int n = m.rows;
  SmithResult s = smithNormalForm(m);
  AbelianGroup g;
  std::vector<int> keep; // coordinates that survive in the quotient
  for (int i = 0; i < n; i++) {
    Int d = s.d.at(i, i);
    if (d == 0) {
      g.freeRank++;
      keep.push_back(i);
    } else if (d >= 2) {
      g.invariantFactors.push_back(d);
      keep.push_back(i);
    }
  }
  // order: torsion coordinates first (they appear before zero rows in SNF)
  std::stable_sort(keep.begin(), keep.end(), [&](int x, int y) {
    bool xz = s.d.at(x, x) == 0, yz = s.d.at(y, y) == 0;
    return xz < yz;
  });
  for (int j = 0; j < n; j++) {
    std::vector<Int> img;
    for (int idx : keep) img.push_back(s.u.at(idx, j));
    g.generatorImages.push_back(g.reduce(std::move(img)));
  }
  return g;
}

} // namespace braidcover
