#pragma once

#include <json.hpp>

#include "zfgd/enumeration.hpp"
#include "zfgd/graph.hpp"
#include "zfgd/path_cover.hpp"
#include "zfgd/recognizers.hpp"
#include "zfgd/sequences.hpp"
#include "zfgd/tree_iso.hpp"
#include "zfgd/zero_forcing.hpp"

namespace zfgd {

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const DominationSequence& seq);
nlohmann::json to_json(const GrundyResult& res);
nlohmann::json to_json(const ForcingTrace& trace);
nlohmann::json to_json(const PathCover& cover);
nlohmann::json to_json(const CanonicalCode& code);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const CensusReport& report);

}  // namespace zfgd
