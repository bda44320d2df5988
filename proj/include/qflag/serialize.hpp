#pragma once

#include <json.hpp>

#include <string>

#include "qflag/irreps.hpp"
#include "qflag/laurent.hpp"
#include "qflag/ncalg.hpp"
#include "qflag/report.hpp"

namespace qflag {

nlohmann::json laurent_to_json(const Laurent& x);
Laurent laurent_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const nlohmann::json& j, int n);

nlohmann::json representation_to_json(const Representation& rep);
Representation representation_from_json(const nlohmann::json& j);

/// Canonical file form: byte-identical for identical representations.
std::string representation_to_string(const Representation& rep);

/// Writes the canonical form; throws std::runtime_error on I/O failure and
/// never leaves a partial file behind.
void export_representation(const Representation& rep, const std::string& path);
Representation import_representation(const std::string& path);

/// Tiny expression grammar for exact scalars on the command line:
/// sums of terms "rational", "q^k", "v^k", "rational*q^k", e.g. "q^-2+1/2".
Laurent parse_laurent_expr(const std::string& text);

nlohmann::json report_to_json(const Report& rep);

}  // namespace qflag
