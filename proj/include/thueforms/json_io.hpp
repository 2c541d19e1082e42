#ifndef THUEFORMS_JSON_IO_HPP
#define THUEFORMS_JSON_IO_HPP

#include <json.hpp>

#include "thueforms/recurrences.hpp"
#include "thueforms/siegel.hpp"
#include "thueforms/solver.hpp"

namespace thue {

using nlohmann::json;

// big integers are emitted as decimal strings throughout
json poly_to_json(const IntPoly& p);
json poly_to_json(const RatPoly& p);
json form_to_json(const BinaryForm& f, std::optional<long> a = std::nullopt);
std::string form_to_csv(const BinaryForm& f, long a);
json solution_to_json(const Solution& s);
json search_summary_json(const SearchResult& r, const KappaReport& k);
json profile_to_json(const EmbeddingProfile& p);
json lemma_report_json(const LemmaFuzzReport& r);

} // namespace thue

#endif
