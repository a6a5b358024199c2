#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordgraph/regularity.hpp"
#include "ordgraph/verdict.hpp"

namespace ordgraph {

inline constexpr const char* kVersion = "0.1.0";

// Serializable analysis summary; paths appear as words.
struct AnalysisReport {
  struct FibreWitness {
    std::string cycle, seed, connector;
    bool operator==(const FibreWitness&) const = default;
  };
  struct LevelEntry {
    unsigned level = 0;
    bool is_source = false;
    bool is_source_regular = false;
    std::string fibre_kind;                // FiniteSet | InfiniteWitness | Unknown
    std::vector<std::string> members;      // FiniteSet
    std::optional<FibreWitness> witness;   // InfiniteWitness
    std::optional<std::size_t> bound;      // Unknown
    std::optional<bool> is_regular;        // nullopt = unknown
    bool operator==(const LevelEntry&) const = default;
  };
  struct VertexEntry {
    std::string name;
    std::vector<LevelEntry> per_level;
    bool operator==(const VertexEntry&) const = default;
  };
  struct FalphaEntry {
    unsigned level = 0;
    std::size_t vertex_count = 0, edge_count = 0;
    std::vector<std::vector<std::string>> cycles_without_entry;  // representative names
    bool operator==(const FalphaEntry&) const = default;
  };
  struct VWitness {
    unsigned level = 0;
    std::string generator, vertex;
    bool operator==(const VWitness&) const = default;
  };
  struct CkJson {
    unsigned level = 0;
    std::string status;
    std::optional<std::string> reason;
    bool operator==(const CkJson&) const = default;
  };

  std::string graph;
  std::vector<unsigned> levels;
  std::vector<VertexEntry> vertices;
  std::vector<FalphaEntry> falpha;
  bool condition_v_holds = true;
  std::optional<VWitness> condition_v_witness;
  std::string condition_s_status;
  std::optional<std::string> condition_s_detail;
  std::vector<CkJson> ck_uniqueness;
  std::string simplicity;
  std::string version = kVersion;
  std::size_t fibre_bound = kDefaultBound;

  // not serialized: human output only
  std::vector<std::string> warnings;
  std::vector<std::string> relation_lines;

  bool operator==(const AnalysisReport& o) const;
};

// levels: restrict per-vertex and quotient entries to these (empty = 0..K)
AnalysisReport build_report(const Presentation& p, std::size_t bound = kDefaultBound,
                            const std::vector<unsigned>& levels = {});

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

std::string render_text(const AnalysisReport& r);

}  // namespace ordgraph
