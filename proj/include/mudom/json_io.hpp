#ifndef MUDOM_JSON_IO_HPP
#define MUDOM_JSON_IO_HPP

#include <json.hpp>

#include "mudom/domains.hpp"
#include "mudom/pentablock.hpp"
#include "mudom/prober.hpp"
#include "mudom/ssv.hpp"

namespace mudom {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// complex values travel as two-element arrays [re, im], never strings
json complex_to_json(Complex z);
Complex json_to_complex(const json& j);

json point_to_json(const CPoint& x);
CPoint json_to_point(const json& j);

json matrix_to_json(const CMatrix& A);
CMatrix json_to_matrix(const json& j);

const char* membership_name(Membership m);
Membership membership_from_name(const std::string& name);
const char* method_name(MemberMethod m);

json membership_to_json(const MembershipResult& r);
json mu_interval_to_json(const MuInterval& iv);
json table_to_json(const MultiIndexTable& t);
json embedding_to_json(const EmbeddingResult& e);
json functional_to_json(const AffineFunctional& f);
json section_to_json(const SectionMap& map);  // summary; raster goes to CSV

// envelope every CLI report shares: schema, subcommand, echoed inputs, result
json report_envelope(const std::string& subcommand, json inputs, json result);

void write_section_csv(const SectionMap& map, std::ostream& os);

}  // namespace mudom

#endif
