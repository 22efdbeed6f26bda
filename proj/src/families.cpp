#include "matos/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace matos {

std::optional<RatMatrix> QuadMatrix::as_rational() const {
  for (const Quad& v : a_)
    if (v.b != 0) return std::nullopt;
  RatMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).a;
  return m;
}

int quad_rank(const QuadMatrix& m) {
  std::vector<std::vector<Quad>> rows(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m.at(r, c);
  }
  return field_rank(std::move(rows));
}

Matroid matroid_from_quad_vectors(const QuadMatrix& columns, std::string name) {
  const int n = columns.cols();
  const int d = columns.rows();
  for (int c = 0; c < n; ++c) {
    bool zero = true;
    for (int r = 0; r < d && zero; ++r) zero = columns.at(r, c).is_zero();
    if (zero) throw std::invalid_argument("column " + std::to_string(c + 1) + " is zero (loop)");
  }
  auto rank_of_columns = [&](const std::vector<int>& elems) {
    QuadMatrix sub(d, static_cast<int>(elems.size()), columns.field_d());
    for (int j = 0; j < static_cast<int>(elems.size()); ++j)
      for (int r = 0; r < d; ++r) sub.at(r, j) = columns.at(r, elems[static_cast<std::size_t>(j)] - 1);
    return quad_rank(sub);
  };
  for (int c1 = 1; c1 <= n; ++c1)
    for (int c2 = c1 + 1; c2 <= n; ++c2)
      if (rank_of_columns({c1, c2}) < 2)
        throw std::invalid_argument("columns " + std::to_string(c1) + " and " + std::to_string(c2) +
                                    " are parallel");
  return matroid_from_rank_oracle(
      n, [&](Subset s) { return rank_of_columns(elements_of(s)); }, std::move(name));
}

GF::GF(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) throw std::invalid_argument("GF(q) supports q in {2,3,4,5}");
  add_.resize(static_cast<std::size_t>(q * q));
  mul_.resize(static_cast<std::size_t>(q * q));
  if (q == 4) {
    static constexpr int kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        add_[static_cast<std::size_t>(a * 4 + b)] = a ^ b;
        mul_[static_cast<std::size_t>(a * 4 + b)] = kMul[a][b];
      }
    }
  } else {
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[static_cast<std::size_t>(a * q + b)] = (a + b) % q;
        mul_[static_cast<std::size_t>(a * q + b)] = (a * b) % q;
      }
    }
  }
}

int ag_point_index(int q, int x, int y) { return 1 + x + q * y; }

std::vector<std::vector<Subset>> ag_parallel_classes(int q) {
  GF f(q);
  std::vector<std::vector<Subset>> classes;
  // Vertical pencil x = c first.
  std::vector<Subset> vertical;
  for (int c = 0; c < q; ++c) {
    Subset line = 0;
    for (int y = 0; y < q; ++y) line |= bit_of(ag_point_index(q, c, y));
    vertical.push_back(line);
  }
  classes.push_back(std::move(vertical));
  // Slope classes y = m*x + b.
  for (int m = 0; m < q; ++m) {
    std::vector<Subset> pencil;
    for (int b = 0; b < q; ++b) {
      Subset line = 0;
      for (int x = 0; x < q; ++x) {
        int y = f.add(f.mul(m, x), b);
        line |= bit_of(ag_point_index(q, x, y));
      }
      pencil.push_back(line);
    }
    classes.push_back(std::move(pencil));
  }
  return classes;
}

namespace {

// cos/sin of an angle that is a multiple of 30 or 45 degrees, as exact
// elements of Q(sqrt 3) or Q(sqrt 2).
Quad exact_cos(int deg) {
  deg = ((deg % 360) + 360) % 360;
  switch (deg) {
    case 0: return Quad(1);
    case 30: return {Rat(0), Rat(1, 2), 3};
    case 45: return {Rat(0), Rat(1, 2), 2};
    case 60: return Quad(Rat(1, 2));
    case 90: return Quad(0);
    case 120: return Quad(Rat(-1, 2));
    case 135: return {Rat(0), Rat(-1, 2), 2};
    case 150: return {Rat(0), Rat(-1, 2), 3};
    case 180: return Quad(Rat(-1));
    case 210: return {Rat(0), Rat(-1, 2), 3};
    case 225: return {Rat(0), Rat(-1, 2), 2};
    case 240: return Quad(Rat(-1, 2));
    case 270: return Quad(0);
    case 300: return Quad(Rat(1, 2));
    case 315: return {Rat(0), Rat(1, 2), 2};
    case 330: return {Rat(0), Rat(1, 2), 3};
    default: throw std::invalid_argument("angle not supported exactly: " + std::to_string(deg));
  }
}

Quad exact_sin(int deg) { return exact_cos(deg - 90); }

// Homogenized line a*x + b*y = c through two exact points, as the column
// (a, b, -c).
std::array<Quad, 3> line_through(const std::array<Quad, 2>& p, const std::array<Quad, 2>& q) {
  Quad a = -(q[1] - p[1]);
  Quad b = q[0] - p[0];
  Quad c = a * p[0] + b * p[1];
  return {a, b, -c};
}

QuadMatrix ngon_arrangement(int k, bool with_short_diagonals) {
  if (k != 3 && k != 4 && k != 6)
    throw std::invalid_argument("ngon(k) realized exactly only for k in {3,4,6}");
  const int verts = 2 * k;
  std::vector<std::array<Quad, 2>> v(static_cast<std::size_t>(verts));
  for (int j = 0; j < verts; ++j) {
    int deg = j * 180 / k;
    v[static_cast<std::size_t>(j)] = {exact_cos(deg), exact_sin(deg)};
  }
  std::vector<std::array<Quad, 3>> lines;
  for (int j = 0; j < verts; ++j)
    lines.push_back(line_through(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>((j + 1) % verts)]));
  for (int j = 0; j < k; ++j)
    lines.push_back(line_through(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j + k)]));
  if (with_short_diagonals) {
    for (int j = 0; j < verts; j += 2)
      lines.push_back(line_through(v[static_cast<std::size_t>(j)], v[static_cast<std::size_t>((j + 2) % verts)]));
  }
  long d = (k == 4) ? 2 : 3;
  QuadMatrix m(3, static_cast<int>(lines.size()), d);
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < 3; ++r) m.at(r, c) = lines[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  return m;
}

// Affine points in R^3 homogenized to columns (1, x, y, z).
RatMatrix affine_points(const std::vector<std::array<long, 3>>& pts) {
  RatMatrix m(4, static_cast<int>(pts.size()));
  for (int c = 0; c < m.cols(); ++c) {
    m.at(0, c) = 1;
    for (int r = 0; r < 3; ++r) m.at(r + 1, c) = pts[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  }
  return m;
}

QuadMatrix rational_to_quad(const RatMatrix& m) {
  QuadMatrix q(m.rows(), m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) q.at(r, c) = Quad(m.at(r, c));
  return q;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& tag) {
  FamilySpec spec;
  auto colon = tag.find(':');
  std::string head = tag.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : tag.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed family tag: " + tag);
    return std::stoi(s);
  };
  if (head == "u") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("u needs rank and size: u:<r>,<n>");
    spec.kind = Kind::kUniform;
    spec.a = parse_int(args.substr(0, comma));
    spec.b = parse_int(args.substr(comma + 1));
  } else if (head == "p5") {
    spec.kind = Kind::kP5;
  } else if (head == "m1") {
    spec.kind = Kind::kM1;
  } else if (head == "m2") {
    spec.kind = Kind::kM2;
  } else if (head == "ngon") {
    spec.kind = Kind::kNgon;
    spec.a = parse_int(args);
  } else if (head == "a112") {
    spec.kind = Kind::kA112;
  } else if (head == "ag") {
    spec.kind = Kind::kAg;
    spec.a = parse_int(args);
  } else {
    throw std::invalid_argument("unknown family: " + tag);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::kUniform: return "u:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::kP5: return "p5";
    case Kind::kM1: return "m1";
    case Kind::kM2: return "m2";
    case Kind::kNgon: return "ngon:" + std::to_string(a);
    case Kind::kA112: return "a112";
    case Kind::kAg: return "ag:" + std::to_string(a);
  }
  return "";
}

Generated generate(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::kUniform: {
      const int r = spec.a, n = spec.b;
      if (r < 1 || r > n) throw std::invalid_argument("uniform matroid needs 1 <= r <= n");
      if (r == 1 && n > 1) throw std::invalid_argument("U(1,n) with n > 1 has parallel elements");
      if (n > Matroid::kRankTableMax) throw CapacityError("uniform matroid limited to n <= 20");
      std::vector<Subset> circuits;
      if (r < n) circuits = subsets_of_size(n, r + 1);
      return {Matroid::from_circuits(n, std::move(circuits), "U(" + std::to_string(r) + "," + std::to_string(n) + ")"),
              std::nullopt};
    }
    case Kind::kP5: {
      Matroid m = matroid_from_lines(5, {subset_from({1, 2, 3}, 5), subset_from({3, 4, 5}, 5)}, "P5");
      return {std::move(m), std::nullopt};
    }
    case Kind::kM1: {
      // Two skew 3-point lines in affine 3-space plus a point in general
      // position; combinatorially the free extension of U(2,3) + U(2,3).
      Matroid u23 = generate("u:2,3").matroid;
      Matroid m = Matroid::direct_sum(u23, u23).free_extension();
      m.set_name("M1");
      RatMatrix pts = affine_points({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {3, 5, 7}});
      return {std::move(m), rational_to_quad(pts)};
    }
    case Kind::kM2: {
      // Two coplanar concurrent 3-point lines, one point off the plane, one
      // generic point; the free extension of P5 + coloop.
      Matroid p5 = generate("p5").matroid;
      Matroid coloop = Matroid::from_circuits(1, {}, "coloop");
      Matroid m = Matroid::direct_sum(p5, coloop).free_extension();
      m.set_name("M2");
      RatMatrix pts = affine_points({{1, 0, 0}, {2, 0, 0}, {0, 0, 0}, {0, 1, 0}, {0, 2, 0}, {0, 0, 1}, {3, 5, 7}});
      return {std::move(m), rational_to_quad(pts)};
    }
    case Kind::kNgon: {
      if (spec.a < 3) throw std::invalid_argument("ngon(k) needs k >= 3");
      QuadMatrix arrangement = ngon_arrangement(spec.a, false);
      Matroid m = matroid_from_quad_vectors(arrangement, "ngon(" + std::to_string(spec.a) + ")");
      return {std::move(m), std::move(arrangement)};
    }
    case Kind::kA112: {
      QuadMatrix arrangement = ngon_arrangement(3, true);
      Matroid m = matroid_from_quad_vectors(arrangement, "A1(12)");
      return {std::move(m), std::move(arrangement)};
    }
    case Kind::kAg: {
      const int q = spec.a;
      if (q != 2 && q != 3 && q != 4 && q != 5) throw std::invalid_argument("ag(q) supports q in {2,3,4,5}");
      std::vector<Subset> lines;
      for (const auto& pencil : ag_parallel_classes(q))
        for (Subset line : pencil) lines.push_back(line);
      Matroid m = matroid_from_lines(q * q, lines, "AG(2," + std::to_string(q) + ")");
      return {std::move(m), std::nullopt};
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace matos
