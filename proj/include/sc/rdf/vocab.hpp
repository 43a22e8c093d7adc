#pragma once

#include <string_view>

namespace sc::rdf::vocab {

namespace rdf {
inline constexpr std::string_view ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdf

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view double_ = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view duration = "http://www.w3.org/2001/XMLSchema#duration";
inline constexpr std::string_view day_time_duration =
    "http://www.w3.org/2001/XMLSchema#dayTimeDuration";
inline constexpr std::string_view date_time = "http://www.w3.org/2001/XMLSchema#dateTime";
inline constexpr std::string_view date_time_stamp =
    "http://www.w3.org/2001/XMLSchema#dateTimeStamp";
}  // namespace xsd

namespace ldp {
inline constexpr std::string_view ns = "http://www.w3.org/ns/ldp#";
inline constexpr std::string_view container = "http://www.w3.org/ns/ldp#Container";
inline constexpr std::string_view contains = "http://www.w3.org/ns/ldp#contains";
inline constexpr std::string_view has_member_relation = "http://www.w3.org/ns/ldp#hasMemberRelation";
inline constexpr std::string_view membership_resource = "http://www.w3.org/ns/ldp#membershipResource";
}  // namespace ldp

namespace ldpsc {
inline constexpr std::string_view ns = "https://solid.ti.rw.fau.de/public/ns/stream-containers#";
inline constexpr std::string_view stream_container =
    "https://solid.ti.rw.fau.de/public/ns/stream-containers#StreamContainer";
inline constexpr std::string_view window =
    "https://solid.ti.rw.fau.de/public/ns/stream-containers#window";
inline constexpr std::string_view logical =
    "https://solid.ti.rw.fau.de/public/ns/stream-containers#logical";
inline constexpr std::string_view physical =
    "https://solid.ti.rw.fau.de/public/ns/stream-containers#physical";
inline constexpr std::string_view content_timestamp_relation =
    "https://solid.ti.rw.fau.de/public/ns/stream-containers#contentTimestampRelation";
}  // namespace ldpsc

namespace sosa {
inline constexpr std::string_view ns = "http://www.w3.org/ns/sosa/";
inline constexpr std::string_view observation = "http://www.w3.org/ns/sosa/Observation";
inline constexpr std::string_view observed_property = "http://www.w3.org/ns/sosa/observedProperty";
inline constexpr std::string_view has_simple_result = "http://www.w3.org/ns/sosa/hasSimpleResult";
inline constexpr std::string_view result_time = "http://www.w3.org/ns/sosa/resultTime";
}  // namespace sosa

namespace ex {
inline constexpr std::string_view ns = "http://example.org/";
}  // namespace ex

}  // namespace sc::rdf::vocab
