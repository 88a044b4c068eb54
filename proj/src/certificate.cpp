#include "latcover/certificate.hpp"

#include <map>
#include <sstream>

namespace latcover {

bool operator==(const Cluster &a, const Cluster &b) {
  return a.points == b.points && a.center == b.center;
}

bool operator==(const CoveringCertificate &a, const CoveringCertificate &b) {
  return a.name == b.name && a.lattice == b.lattice && a.clusters == b.clusters;
}

CertificateError::CertificateError(int line_, const std::string &msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

namespace {

constexpr long long kCoordBound = 100000000;

std::vector<std::string> tokenize(const std::string &line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_coord(const std::string &tok, int line) {
  auto r = parse_rational(tok);
  if (!r || rat_den(*r) != 1)
    throw CertificateError(line, "expected an integer, got '" + tok + "'");
  if (*r > kCoordBound || *r < -kCoordBound)
    throw CertificateError(line, "coordinate out of range");
  return to_ll(rat_num(*r));
}

Rat parse_center_coord(const std::string &tok, int line) {
  auto r = parse_rational(tok);
  if (!r) throw CertificateError(line, "expected a rational, got '" + tok + "'");
  if (*r > kCoordBound || *r < -kCoordBound)
    throw CertificateError(line, "coordinate out of range");
  return *r;
}

}  // namespace

CoveringCertificate parse_certificate(std::string_view text) {
  CoveringCertificate cert;
  enum class State { preamble, top, cluster } state = State::preamble;
  bool have_center = false;
  Cluster cur;
  int cluster_line = 0;

  std::istringstream ss{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto toks = tokenize(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string &kw = toks[0];

    if (state == State::preamble) {
      if (kw == "name") {
        if (toks.size() != 2) throw CertificateError(line, "name takes one word");
        if (!cert.name.empty()) throw CertificateError(line, "duplicate name");
        cert.name = toks[1];
        continue;
      }
      if (kw == "lattice") {
        if (toks.size() != 5) throw CertificateError(line, "lattice takes four integers");
        cert.lattice.u = {parse_coord(toks[1], line), parse_coord(toks[2], line)};
        cert.lattice.v = {parse_coord(toks[3], line), parse_coord(toks[4], line)};
        if (!is_full_rank(cert.lattice))
          throw CertificateError(line, "lattice basis is rank deficient");
        state = State::top;
        continue;
      }
      throw CertificateError(line, "expected name or lattice, got '" + kw + "'");
    }

    if (state == State::top) {
      if (kw != "cluster") throw CertificateError(line, "expected cluster, got '" + kw + "'");
      if (toks.size() != 1) throw CertificateError(line, "cluster takes no arguments");
      cur = Cluster{};
      have_center = false;
      cluster_line = line;
      state = State::cluster;
      continue;
    }

    // inside a cluster
    if (kw == "center") {
      if (toks.size() != 3) throw CertificateError(line, "center takes two rationals");
      if (have_center) throw CertificateError(line, "duplicate center");
      cur.center = {parse_center_coord(toks[1], line), parse_center_coord(toks[2], line)};
      have_center = true;
      continue;
    }
    if (kw == "point") {
      if (toks.size() != 3) throw CertificateError(line, "point takes two integers");
      IntPoint p{parse_coord(toks[1], line), parse_coord(toks[2], line)};
      for (const auto &q : cur.points)
        if (q == p) throw CertificateError(line, "duplicate point " + to_string(p));
      cur.points.push_back(p);
      continue;
    }
    if (kw == "end") {
      if (toks.size() != 1) throw CertificateError(line, "end takes no arguments");
      if (!have_center) throw CertificateError(line, "cluster has no center");
      if (cur.points.empty()) throw CertificateError(line, "cluster has no points");
      cert.clusters.push_back(std::move(cur));
      state = State::top;
      continue;
    }
    throw CertificateError(line, "expected center, point or end, got '" + kw + "'");
  }

  if (state == State::preamble) throw CertificateError(line + 1, "missing lattice");
  if (state == State::cluster)
    throw CertificateError(line + 1, "cluster starting at line " +
                                         std::to_string(cluster_line) + " has no end");
  if (cert.clusters.empty()) throw CertificateError(line + 1, "no clusters");
  return cert;
}

std::string serialize_certificate(const CoveringCertificate &cert) {
  std::ostringstream out;
  if (!cert.name.empty()) out << "name " << cert.name << "\n";
  out << "lattice " << cert.lattice.u.x << " " << cert.lattice.u.y << " "
      << cert.lattice.v.x << " " << cert.lattice.v.y << "\n";
  for (const auto &cl : cert.clusters) {
    out << "cluster\n";
    out << "center " << rat_to_string(cl.center.x) << " " << rat_to_string(cl.center.y)
        << "\n";
    for (const auto &p : cl.points) out << "point " << p.x << " " << p.y << "\n";
    out << "end\n";
  }
  return out.str();
}

namespace {

struct BuiltinEntry {
  const char *alias;
  const char *summary;
  CoveringCertificate cert;
};

std::map<std::string, BuiltinEntry> build_catalog() {
  std::map<std::string, BuiltinEntry> cat;
  auto put = [&](const char *id, const char *alias, const char *summary,
                 IntLattice lat, std::vector<Cluster> cls) {
    CoveringCertificate c;
    c.name = id;
    c.lattice = lat;
    c.clusters = std::move(cls);
    cat[id] = {alias, summary, std::move(c)};
  };
  Rat h = make_rat(Int(1), Int(2));
  put("B1", "singleton", "one point per unit cell, disks of radius at least 2",
      {{1, 0}, {0, 1}}, {{{{0, 0}}, {Rat(0), Rat(0)}}});
  put("B2", "square4", "2x2 blocks on the doubled grid",
      {{2, 0}, {0, 2}}, {{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {h, h}}});
  put("B3", "domino-brick", "dominoes in a brick-wall layout",
      {{2, 0}, {1, 1}}, {{{{0, 0}, {1, 0}}, {h, Rat(0)}}});
  put("B4", "plus5", "plus-shaped pentominoes tiling the plane",
      {{2, 1}, {-1, 2}},
      {{{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {Rat(0), Rat(0)}}});
  put("B5", "block9", "3x3 blocks on the tripled grid",
      {{3, 0}, {0, 3}},
      {{{{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 1}, {1, -1}, {1, 0}, {1, 1}},
        {Rat(0), Rat(0)}}});
  put("B6", "twelve", "twelve-point near-hexagonal motif",
      {{3, 2}, {0, 4}},
      {{{{0, -1}, {0, 0}, {0, 1}, {0, 2}, {1, -1}, {1, 0}, {1, 1}, {1, 2},
         {-1, 0}, {-1, 1}, {2, 0}, {2, 1}},
        {h, h}}});
  return cat;
}

const std::map<std::string, BuiltinEntry> &catalog() {
  static const std::map<std::string, BuiltinEntry> cat = build_catalog();
  return cat;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto &[id, entry] : catalog()) out.push_back(id);
  return out;
}

std::string builtin_summary(const std::string &id) { return catalog().at(id).summary; }

CoveringCertificate builtin(std::string_view name) {
  std::string key(name);
  auto it = catalog().find(key);
  if (it != catalog().end()) return it->second.cert;
  for (const auto &[id, entry] : catalog())
    if (key == entry.alias) return entry.cert;
  throw std::out_of_range("no builtin named " + key);
}

SearchTarget target_from_interval(const SqrtVal &d_lo, const SqrtVal &d_hi) {
  if (d_lo.is_infinite() || d_lo.radicand() <= 0)
    throw std::invalid_argument("lower dilation endpoint must be positive and finite");
  if (d_lo > d_hi) throw std::invalid_argument("empty dilation interval");
  SearchTarget t;
  t.alpha_sq_min = 4 / d_lo.radicand();
  t.beta_sq_max = d_hi.is_infinite() ? Rat(0) : 1 / d_hi.radicand();
  return t;
}

}  // namespace latcover
