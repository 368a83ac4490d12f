#include "toricarc/fan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toricarc/errors.hpp"

namespace toricarc {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxRays = 64;

Mask mask_of(const IndexSet& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

IndexSet indices_of(Mask m) {
  IndexSet out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::string index_set_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void check_invariants(const Fan& fan) {
  if (fan.dim == 0) throw InvariantError("fan dimension must be positive");
  if (fan.rays.size() > kMaxRays) throw InvariantError("at most 64 rays are supported");
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& ray = fan.rays[i];
    if (ray.size() != fan.dim) {
      throw InvariantError("ray " + std::to_string(i) + " has " + std::to_string(ray.size()) +
                           " entries, expected " + std::to_string(fan.dim));
    }
    Int g = 0;
    for (const auto& x : ray) g = gcd(g, x);
    if (g != 1) throw InvariantError("ray " + std::to_string(i) + " " + to_string(ray) + " is not primitive");
    if (!seen.insert(ray).second) throw InvariantError("duplicate ray " + to_string(ray));
  }
  std::set<IndexSet> cones;
  for (const auto& cone : fan.max_cones) {
    if (cone.size() != fan.dim) {
      throw InvariantError("cone " + index_set_string(cone) + " has " + std::to_string(cone.size()) +
                           " rays, expected " + std::to_string(fan.dim));
    }
    IndexSet sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] >= fan.rays.size())
        throw InvariantError("cone " + index_set_string(cone) + " has an out-of-range ray index");
      if (k && sorted[k] == sorted[k - 1])
        throw InvariantError("cone " + index_set_string(cone) + " repeats a ray index");
    }
    if (!cones.insert(sorted).second) throw InvariantError("duplicate cone " + index_set_string(cone));
  }
}

IntMatrix cone_matrix(const Fan& fan, const IndexSet& cone) {
  IntMatrix m(cone.size(), fan.dim);
  for (std::size_t r = 0; r < cone.size(); ++r)
    for (std::size_t c = 0; c < fan.dim; ++c) m(r, c) = fan.rays[cone[r]][c];
  return m;
}

// Generalized cross product of d-1 vectors in Z^d.
IntVector orthogonal_vector(const std::vector<IntVector>& vectors, std::size_t d) {
  IntVector out(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r + 1 < d; ++r)
      for (std::size_t c = 0, mc = 0; c < d; ++c)
        if (c != k) minor(r, mc++) = vectors[r][c];
    Int det = determinant(minor);
    out[k] = (k % 2 == 0) ? det : Int(-det);
  }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// The rays positively span R^d iff they span and the dual cone
// {m : <m, v_i> >= 0 for all i} is {0}. A nonzero pointed dual cone has an
// extreme ray orthogonal to d-1 independent rays, so checking those candidates suffices.
bool positively_spans(const Fan& fan, std::string& details) {
  std::size_t n = fan.rays.size();
  std::size_t d = fan.dim;
  if (rank(IntMatrix::from_rows(fan.rays, d)) < d) {
    details += "rays do not span the ambient space; ";
    return false;
  }
  std::vector<std::size_t> pick(d - 1);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<IntVector> vs;
    for (auto i : pick) vs.push_back(fan.rays[i]);
    IntVector m = orthogonal_vector(vs, d);
    bool nonzero = std::any_of(m.begin(), m.end(), [](const Int& x) { return x != 0; });
    if (nonzero) {
      for (int sign : {1, -1}) {
        bool all_nonneg = true;
        for (const auto& v : fan.rays) all_nonneg = all_nonneg && sgn(dot(m, v)) * sign >= 0;
        if (all_nonneg) {
          details += "all rays lie in a closed half-space; ";
          return false;
        }
      }
    }
    // next (d-1)-combination of {0..n-1}
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] == n - (pick.size() - (k - 1))) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

std::set<Mask> all_faces(const Fan& fan) {
  std::set<Mask> faces;
  for (const auto& cone : fan.max_cones) {
    Mask full = mask_of(cone);
    for (Mask sub = full;; sub = (sub - 1) & full) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  }
  return faces;
}

}  // namespace

Fan parse_fan(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fan JSON: ") + e.what());
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("fan is missing \"") + key + "\"");
    return doc.at(key);
  };
  Fan fan;
  const auto& name = require("name");
  if (!name.is_string()) throw ParseError("\"name\" must be a string");
  fan.name = name.get<std::string>();
  const auto& dim = require("dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0) throw ParseError("\"dim\" must be a nonnegative integer");
  fan.dim = dim.get<std::size_t>();
  const auto& rays = require("rays");
  if (!rays.is_array()) throw ParseError("\"rays\" must be an array");
  for (const auto& ray : rays) {
    if (!ray.is_array()) throw ParseError("each ray must be an array of integers");
    IntVector v;
    for (const auto& x : ray) {
      if (!x.is_number_integer()) throw ParseError("ray entries must be integers");
      v.emplace_back(static_cast<long>(x.get<long long>()));
    }
    fan.rays.push_back(std::move(v));
  }
  const auto& cones = require("max_cones");
  if (!cones.is_array()) throw ParseError("\"max_cones\" must be an array");
  for (const auto& cone : cones) {
    if (!cone.is_array()) throw ParseError("each cone must be an array of ray indices");
    IndexSet s;
    for (const auto& x : cone) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw ParseError("cone entries must be nonnegative integers");
      s.push_back(x.get<std::size_t>());
    }
    fan.max_cones.push_back(std::move(s));
  }
  check_invariants(fan);
  return fan;
}

Fan load_fan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fan file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fan(buffer.str());
}

std::string serialize_fan(const Fan& fan) {
  std::ostringstream out;
  out << "{\n  \"name\": " << nlohmann::json(fan.name).dump() << ",\n";
  out << "  \"dim\": " << fan.dim << ",\n";
  auto list = [](const auto& items) {
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      if constexpr (std::is_same_v<std::decay_t<decltype(items[i])>, Int>) {
        s += items[i].get_str();
      } else {
        s += std::to_string(items[i]);
      }
    }
    return s + "]";
  };
  out << "  \"rays\": [";
  for (std::size_t i = 0; i < fan.rays.size(); ++i) out << (i ? ", " : "") << list(fan.rays[i]);
  out << "],\n  \"max_cones\": [";
  for (std::size_t i = 0; i < fan.max_cones.size(); ++i) out << (i ? ", " : "") << list(fan.max_cones[i]);
  out << "]\n}\n";
  return out.str();
}

IntMatrix ray_matrix(const Fan& fan) { return IntMatrix::from_rows(fan.rays, fan.dim); }

Fan projective_space(std::size_t n) {
  Fan fan;
  fan.name = "P" + std::to_string(n);
  fan.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.emplace_back(n, Int(-1));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    IndexSet cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    fan.max_cones.push_back(std::move(cone));
  }
  check_invariants(fan);
  return fan;
}

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  std::string details;
  report.simplicial = true;
  report.smooth = true;
  for (const auto& cone : fan.max_cones) {
    Int det = determinant(cone_matrix(fan, cone));
    if (det == 0) {
      report.simplicial = false;
      details += "cone " + index_set_string(cone) + " is degenerate; ";
    }
    if (abs(det) != 1) {
      report.smooth = false;
      details += "cone " + index_set_string(cone) + " has determinant " + det.get_str() + "; ";
    }
  }

  report.facet_paired = !fan.max_cones.empty();
  std::vector<Mask> cone_masks;
  for (const auto& cone : fan.max_cones) cone_masks.push_back(mask_of(cone));
  for (const auto& cone : fan.max_cones) {
    for (auto dropped : cone) {
      Mask facet = mask_of(cone) & ~(Mask{1} << dropped);
      auto count = std::count_if(cone_masks.begin(), cone_masks.end(),
                                 [facet](Mask m) { return (m & facet) == facet; });
      if (count != 2) {
        report.facet_paired = false;
        IndexSet f = indices_of(facet);
        details += "facet " + index_set_string(f) + " lies in " + std::to_string(count) + " maximal cone(s); ";
      }
    }
  }

  report.rays_positively_span = positively_spans(fan, details);

  bool inequalities = report.simplicial;
  if (report.simplicial) {
    for (const auto& cone : fan.max_cones) {
      auto m = solve(cone_matrix(fan, cone), IntVector(fan.dim, Int(1)));
      Mask inside = mask_of(cone);
      for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        if (inside & (Mask{1} << j)) continue;
        Rational pairing = 0;
        for (std::size_t c = 0; c < fan.dim; ++c) pairing += m[c] * fan.rays[j][c];
        if (pairing >= 1) {
          inequalities = false;
          details += "cone " + index_set_string(cone) + ": <m, v" + std::to_string(j) + "> = " +
                     to_string(pairing) + " is not < 1; ";
        }
      }
    }
  }
  report.fano = inequalities && report.smooth && report.facet_paired;
  if (report.pseudo_complete()) details += "pseudo-complete (facet-paired, rays positively span); ";
  if (details.size() >= 2) details.resize(details.size() - 2);
  report.details = details;
  return report;
}

PrimitiveCollectionSet primitive_collections(const Fan& fan) {
  auto faces = all_faces(fan);
  std::size_t n = fan.rays.size();
  PrimitiveCollectionSet out;
  std::size_t max_size = std::min(n, fan.dim + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Mask m = mask_of(pick);
      if (!faces.contains(m)) {
        bool minimal = true;
        for (auto i : pick) minimal = minimal && faces.contains(m & ~(Mask{1} << i));
        if (minimal) out.collections.push_back(pick);
      }
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == n - (k - (j - 1))) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return out;
}

std::vector<std::size_t> f_vector(const Fan& fan) {
  std::vector<std::size_t> f(fan.dim + 1);
  for (Mask m : all_faces(fan)) ++f[static_cast<std::size_t>(std::popcount(m))];
  return f;
}

std::vector<long> h_vector(const Fan& fan) {
  auto f = f_vector(fan);
  std::size_t d = fan.dim;
  // coefficients of x^0..x^d
  std::vector<long> poly(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    // f_k (x-1)^(d-k)
    std::size_t e = d - k;
    long binom = 1;
    for (std::size_t j = 0; j <= e; ++j) {
      long sign = ((e - j) % 2 == 0) ? 1 : -1;
      poly[j] += static_cast<long>(f[k]) * sign * binom;
      binom = binom * static_cast<long>(e - j) / static_cast<long>(j + 1);
    }
  }
  // h_k is the coefficient of x^(d-k)
  std::vector<long> h(d + 1);
  for (std::size_t k = 0; k <= d; ++k) h[k] = poly[d - k];
  return h;
}

}  // namespace toricarc
