#include "lig/geometry/space.hpp"

#include <algorithm>
#include <map>

namespace lig::geometry {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Decode a base-q integer into a coordinate vector, most significant first.
void decode(std::uint64_t code, unsigned q, std::size_t len, Elem* out) {
  for (std::size_t i = len; i-- > 0;) {
    out[i] = static_cast<Elem>(code % q);
    code /= q;
  }
}

std::uint64_t encode(const Elem* v, unsigned q, std::size_t len) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < len; ++i) c = c * q + v[i];
  return c;
}

}  // namespace

std::uint64_t expected_point_count(SpaceKind kind, unsigned n, unsigned q) {
  if (kind == SpaceKind::Affine) return ipow(q, n);
  return (ipow(q, n + 1) - 1) / (q - 1);
}

std::uint64_t expected_line_count(SpaceKind kind, unsigned n, unsigned q) {
  if (kind == SpaceKind::Affine) return ipow(q, n - 1) * (ipow(q, n) - 1) / (q - 1);
  // Gaussian binomial [n+1 choose 2]_q
  const std::uint64_t a = ipow(q, n + 1);
  return (a - 1) * (a - q) / ((q * q - 1) * (q * q - q));
}

Space::Space(const Space& o)
    : params_(o.params_),
      field_(o.field_),
      point_count_(o.point_count_),
      dim_(o.dim_),
      coords_(o.coords_),
      hcoords_(o.hcoords_),
      lines_(o.lines_),
      point_lines_(o.point_lines_),
      join_(o.join_) {}

Space::Space(Space&& o) noexcept
    : params_(o.params_),
      field_(std::move(o.field_)),
      point_count_(o.point_count_),
      dim_(o.dim_),
      coords_(std::move(o.coords_)),
      hcoords_(std::move(o.hcoords_)),
      lines_(std::move(o.lines_)),
      point_lines_(std::move(o.point_lines_)),
      join_(std::move(o.join_)),
      coord_reads_(o.coord_reads_.load()) {}

Space& Space::operator=(Space&& o) noexcept {
  params_ = o.params_;
  field_ = std::move(o.field_);
  point_count_ = o.point_count_;
  dim_ = o.dim_;
  coords_ = std::move(o.coords_);
  hcoords_ = std::move(o.hcoords_);
  lines_ = std::move(o.lines_);
  point_lines_ = std::move(o.point_lines_);
  join_ = std::move(o.join_);
  coord_reads_.store(o.coord_reads_.load());
  return *this;
}

Space Space::build(SpaceKind kind, unsigned n, unsigned q, const BuildOptions& opt) {
  if (n < 3) throw Error(ErrorCode::DimensionTooSmall, "dimension must be at least 3, got " + std::to_string(n));
  FieldPrime field(q);
  const std::uint64_t want_lines = expected_line_count(kind, n, q);
  if (want_lines > opt.max_lines)
    throw Error(ErrorCode::ModelTooLarge, "model has " + std::to_string(want_lines) + " lines, cap is " +
                                              std::to_string(opt.max_lines));

  Space s(SpaceParams::make(kind, n, q), field);
  const bool proj = kind == SpaceKind::Projective;
  s.dim_ = proj ? n + 1 : n;

  // Points in lexicographic order of their canonical coordinates.
  std::vector<std::int64_t> code_to_id(ipow(q, static_cast<unsigned>(s.dim_)), -1);
  std::vector<Elem> v(s.dim_);
  for (std::uint64_t code = 0; code < code_to_id.size(); ++code) {
    decode(code, q, s.dim_, v.data());
    if (proj) {
      auto nz = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
      if (nz == v.end() || *nz != 1) continue;
    }
    code_to_id[code] = static_cast<std::int64_t>(s.point_count_++);
    s.coords_.insert(s.coords_.end(), v.begin(), v.end());
    if (!proj) s.hcoords_.push_back(1);
    s.hcoords_.insert(s.hcoords_.end(), v.begin(), v.end());
  }
  if (s.point_count_ != expected_point_count(kind, n, q))
    throw Error(ErrorCode::ModelTooLarge, "internal: point count mismatch");

  const std::size_t P = s.point_count_;
  auto point_of = [&](const std::vector<Elem>& w) -> PointId {
    std::vector<Elem> u = w;
    if (proj) {
      auto nz = std::find_if(u.begin(), u.end(), [](Elem e) { return e != 0; });
      const Elem sc = field.inv(*nz);
      for (auto& e : u) e = field.mul(e, sc);
    }
    return static_cast<PointId>(code_to_id[encode(u.data(), q, u.size())]);
  };

  std::vector<std::uint8_t> covered(P * P, 0);
  std::vector<std::vector<PointId>> found;
  std::vector<Elem> w(s.dim_);
  for (PointId a = 0; a < P; ++a) {
    for (PointId b = a + 1; b < P; ++b) {
      if (covered[a * P + b]) continue;
      const Elem* A = &s.coords_[a * s.dim_];
      const Elem* B = &s.coords_[b * s.dim_];
      std::vector<PointId> pts;
      if (proj) {
        pts.push_back(b);
        for (unsigned t = 0; t < q; ++t) {
          for (std::size_t i = 0; i < s.dim_; ++i) w[i] = field.add(A[i], field.mul(static_cast<Elem>(t), B[i]));
          pts.push_back(point_of(w));
        }
      } else {
        for (unsigned t = 0; t < q; ++t) {
          for (std::size_t i = 0; i < s.dim_; ++i)
            w[i] = field.add(A[i], field.mul(static_cast<Elem>(t), field.sub(B[i], A[i])));
          pts.push_back(point_of(w));
        }
      }
      std::sort(pts.begin(), pts.end());
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) covered[pts[i] * P + pts[j]] = 1;
      found.push_back(std::move(pts));
    }
  }
  std::sort(found.begin(), found.end());
  if (found.size() != want_lines)
    throw Error(ErrorCode::ModelTooLarge, "internal: line count " + std::to_string(found.size()) +
                                              " differs from closed form " + std::to_string(want_lines));

  s.point_lines_.assign(P, {});
  s.join_.assign(P * P, kNoLine);
  s.lines_.reserve(found.size());
  for (std::size_t id = 0; id < found.size(); ++id) {
    Line l;
    l.id = static_cast<LineId>(id);
    l.points = std::move(found[id]);
    l.basis[0] = l.points[0];
    l.basis[1] = l.points[1];
    for (PointId p : l.points) s.point_lines_[p].push_back(l.id);
    for (PointId x : l.points)
      for (PointId y : l.points)
        if (x != y) s.join_[x * P + y] = l.id;
    s.lines_.push_back(std::move(l));
  }
  return s;
}

void Space::check_point(PointId p) const {
  if (p >= point_count_) throw Error(ErrorCode::InvalidId, "point id " + std::to_string(p) + " out of range");
}

const Line& Space::line(LineId id) const {
  if (id >= lines_.size()) throw Error(ErrorCode::InvalidId, "line id " + std::to_string(id) + " out of range");
  return lines_[id];
}

const std::vector<LineId>& Space::lines_through(PointId p) const {
  check_point(p);
  return point_lines_[p];
}

LineId Space::join(PointId a, PointId b) const {
  check_point(a);
  check_point(b);
  if (a == b) throw Error(ErrorCode::InvalidId, "join of a point with itself");
  return join_[a * point_count_ + b];
}

bool Space::incident(PointId p, LineId l) const {
  const auto& pts = line(l).points;
  return std::binary_search(pts.begin(), pts.end(), p);
}

std::span<const Elem> Space::coords(PointId p) const {
  check_point(p);
  coord_reads_.fetch_add(1, std::memory_order_relaxed);
  return {coords_.data() + p * dim_, dim_};
}

std::span<const Elem> Space::hvec(PointId p) const {
  check_point(p);
  coord_reads_.fetch_add(1, std::memory_order_relaxed);
  const std::size_t hd = params_.n + 1;
  return {hcoords_.data() + p * hd, hd};
}

}  // namespace lig::geometry
