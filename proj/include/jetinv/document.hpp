#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "jetinv/charts.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/jet.hpp"
#include "jetinv/polynomial.hpp"

namespace jetinv {

using Json = nlohmann::json;

enum class DocumentKind { velocity, group, grassmann, chart, polynomial_map };

std::string_view to_string(DocumentKind kind);

/// Parses JSON text; ParseError on malformed input.
Json parse_json(std::string_view text);

DocumentKind document_kind(const Json& doc);
/// Declared scalar mode, rational when absent.
ScalarMode document_mode(const Json& doc);

// Documents use 1-based components and index entries. Every canonical
// (component, index) pair must appear exactly once; values are strings
// ("p/q" or "p" in rational mode, decimal literals in float mode). A document
// without "scalar_mode" is read in whichever mode is requested.

template <class T>
Json to_json(const Velocity<T>& v);
template <class T>
Json to_json(const GroupJet<T>& a);
template <class T>
Json to_json(const GrassmannPoint<T>& p);
template <class T>
Json to_json(const ChartJet<T>& f);
template <class T>
Json to_json(const PolynomialMap<T>& f);

template <class T>
Velocity<T> velocity_from_json(const Json& doc);
template <class T>
GroupJet<T> group_from_json(const Json& doc);
template <class T>
GrassmannPoint<T> grassmann_from_json(const Json& doc);
template <class T>
ChartJet<T> chart_from_json(const Json& doc);
template <class T>
PolynomialMap<T> polynomial_map_from_json(const Json& doc);

}  // namespace jetinv
