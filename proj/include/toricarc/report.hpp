#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "toricarc/arc_model.hpp"
#include "toricarc/cohomology.hpp"
#include "toricarc/fan.hpp"
#include "toricarc/jets.hpp"

namespace toricarc {

inline constexpr int kSchemaVersion = 1;

/// A command result in both output formats.
struct Report {
  nlohmann::json json;
  std::string text;
};

struct ProductEntry {
  std::vector<std::size_t> factors;  ///< 0-based
  Poly value;
};

struct CodimEntry {
  IntVector a;
  IntVector b;
  Int codim;
  std::size_t order = 0;
  std::size_t image_codim = 0;
};

Report validation_report(const Fan& fan, const ValidationReport& v);
Report cohomology_report(const CoxData& cd, const Presentation& p, const GroebnerBasis& gb,
                         const std::vector<std::size_t>& betti);
Report quantum_report(const CoxData& cd, const QuantumRing& ring, const RankReport& rank,
                      const std::vector<ProductEntry>& products);
Report series_report(const CoxData& cd, const CousinReport& c);
Report theorem_report(const CoxData& cd, const TheoremReport& t);
Report codim_report(const CoxData& cd, const CodimEntry& c, const std::vector<std::string>& warnings);
Report jets_report(const JetPresentation& jp);
Report strata_report(const CoxData& cd, const StratumDescriptor& s);
Report floer_report(const CoxData& cd, const FloerSeries& f);

}  // namespace toricarc
