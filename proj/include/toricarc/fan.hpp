#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toricarc/integer.hpp"
#include "toricarc/lattice.hpp"

namespace toricarc {

using IndexSet = std::vector<std::size_t>;

/// Rays and maximal cones of a simplicial fan. Ray order fixes the variable
/// order x_1..x_N everywhere downstream.
struct Fan {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<IndexSet> max_cones;

  std::size_t num_rays() const { return rays.size(); }
  bool operator==(const Fan&) const = default;
};

/// Parses the JSON fan format:
///   {"name": ..., "dim": d, "rays": [[...], ...], "max_cones": [[i, j, ...], ...]}
/// Throws ParseError for malformed input and InvariantError for a
/// non-primitive or duplicate ray, an out-of-range index, or a cone whose size
/// is not dim.
Fan parse_fan(std::string_view text);
Fan load_fan(const std::filesystem::path& path);
std::string serialize_fan(const Fan& fan);

/// Ray matrix with the N rays as rows (N x d).
IntMatrix ray_matrix(const Fan& fan);

/// P^n: rays e_1..e_n, -(e_1+...+e_n); every n-subset of rays is a cone.
Fan projective_space(std::size_t n);

struct ValidationReport {
  bool simplicial = false;
  bool smooth = false;
  bool facet_paired = false;
  bool rays_positively_span = false;
  bool fano = false;
  std::string details;

  /// Necessary condition for completeness; exact completeness is not decided.
  bool pseudo_complete() const { return facet_paired && rays_positively_span; }
};

/// Cone-by-cone checks. fano additionally requires smooth and facet_paired:
/// for each cone sigma, m_sigma with <m_sigma, v_i> = 1 on the rays of sigma
/// must satisfy <m_sigma, v_j> < 1 for every other ray.
ValidationReport validate_fan(const Fan& fan);

struct PrimitiveCollectionSet {
  std::vector<IndexSet> collections;
};

/// Minimal non-faces of the simplicial complex spanned by the maximal cones.
PrimitiveCollectionSet primitive_collections(const Fan& fan);

/// f_k = number of cones with k rays, k = 0..dim (f_0 = 1 counts the origin).
std::vector<std::size_t> f_vector(const Fan& fan);

/// h_0..h_dim from sum_k h_k x^(d-k) = sum_k f_k (x-1)^(d-k).
/// Entries can only be negative for fans that are not facet-paired.
std::vector<long> h_vector(const Fan& fan);

}  // namespace toricarc
