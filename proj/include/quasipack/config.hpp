#pragma once

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quasipack/embedding.hpp"
#include "quasipack/enumerate.hpp"
#include "quasipack/errors.hpp"
#include "quasipack/group_orbits.hpp"
#include "quasipack/strip.hpp"

namespace quasipack {

enum class ExportFormat { csv, json };

inline ExportFormat parse_format(const std::string& s) {
    if (s == "csv") return ExportFormat::csv;
    if (s == "json") return ExportFormat::json;
    throw ValidationError("format must be \"csv\" or \"json\", got \"" + s + "\"");
}

struct OutputOptions {
    std::string path;
    ExportFormat format = ExportFormat::csv;
};

/// A complete run description: which group, which shells seed the cluster,
/// how far to enumerate, where results go.
struct ClusterSpec {
    GroupKind group = GroupKind::dihedral;
    int m = 0;  // dihedral only
    std::vector<Vector> shells;
    Vector offset;  // optional strip anchor in R^k; empty = origin
    EnumerationLimits limits;
    OutputOptions output;
    double orbit_tolerance = 1e-9;
};

namespace detail {

inline void position_of_byte(const std::string& text, std::size_t byte, int& line, int& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

inline void reject_unknown_keys(const nlohmann::json& obj, const std::vector<std::string>& known,
                                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const std::string& k : known)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw ValidationError("unknown key \"" + it.key() + "\" in " + where);
    }
}

inline double require_number(const nlohmann::json& v, const std::string& field) {
    if (!v.is_number()) throw ValidationError("field \"" + field + "\" must be a number");
    return v.get<double>();
}

}  // namespace detail

/// Parses a ClusterSpec from JSON text. Unknown keys are rejected; schema
/// violations raise ValidationError naming the field, syntax errors raise
/// ParseError with line and column.
inline ClusterSpec parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1, col = 1;
        detail::position_of_byte(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        throw ParseError(e.what(), line, col);
    }
    if (!j.is_object()) throw ValidationError("configuration root must be an object");
    detail::reject_unknown_keys(
        j, {"group", "m", "shells", "offset", "limits", "output", "orbit_tolerance"},
        "configuration");

    ClusterSpec spec;
    if (!j.contains("group")) throw ValidationError("missing field \"group\"");
    const std::string group = j["group"].is_string() ? j["group"].get<std::string>() : "";
    if (group == "dihedral")
        spec.group = GroupKind::dihedral;
    else if (group == "icosahedral")
        spec.group = GroupKind::icosahedral;
    else if (group == "linear")
        spec.group = GroupKind::linear;
    else
        throw ValidationError("field \"group\" must be \"dihedral\", \"icosahedral\" or \"linear\"");

    const int dim = spec.group == GroupKind::dihedral ? 2
                    : spec.group == GroupKind::icosahedral ? 3
                                                           : 1;

    if (spec.group == GroupKind::dihedral) {
        if (!j.contains("m")) throw ValidationError("missing field \"m\" (required for dihedral)");
        if (!j["m"].is_number_integer()) throw ValidationError("field \"m\" must be an integer");
        spec.m = j["m"].get<int>();
        if (spec.m < 2) throw ValidationError("field \"m\" must be >= 2");
    } else if (j.contains("m")) {
        throw ValidationError("field \"m\" is only valid for dihedral groups");
    }

    if (!j.contains("shells") || !j["shells"].is_array() || j["shells"].empty())
        throw ValidationError("field \"shells\" must be a nonempty array of seed vectors");
    for (const auto& s : j["shells"]) {
        if (!s.is_array() || s.size() != static_cast<std::size_t>(dim))
            throw ValidationError("each shell seed must be an array of " + std::to_string(dim) +
                                  " numbers");
        Vector seed;
        for (const auto& c : s) seed.push_back(detail::require_number(c, "shells"));
        if (norm(seed) == 0.0) throw ValidationError("shell seeds must be nonzero");
        spec.shells.push_back(std::move(seed));
    }

    if (j.contains("offset")) {
        if (!j["offset"].is_array()) throw ValidationError("field \"offset\" must be an array");
        for (const auto& c : j["offset"])
            spec.offset.push_back(detail::require_number(c, "offset"));
    }

    if (j.contains("limits")) {
        const auto& l = j["limits"];
        if (!l.is_object()) throw ValidationError("field \"limits\" must be an object");
        detail::reject_unknown_keys(l, {"max_points", "max_radius", "max_coordinate"}, "limits");
        if (l.contains("max_points")) {
            if (!l["max_points"].is_number_integer() || l["max_points"].get<std::int64_t>() <= 0)
                throw ValidationError("field \"max_points\" must be a positive integer");
            spec.limits.max_points = l["max_points"].get<std::size_t>();
        }
        if (l.contains("max_radius")) {
            const double r = detail::require_number(l["max_radius"], "max_radius");
            if (!(r > 0.0)) throw ValidationError("field \"max_radius\" must be positive");
            spec.limits.max_physical_radius = r;
        }
        if (l.contains("max_coordinate")) {
            if (!l["max_coordinate"].is_number_integer() ||
                l["max_coordinate"].get<std::int64_t>() <= 0)
                throw ValidationError("field \"max_coordinate\" must be a positive integer");
            spec.limits.max_coordinate = l["max_coordinate"].get<std::int32_t>();
        }
    }
    spec.limits.validate();

    if (j.contains("output")) {
        const auto& o = j["output"];
        if (!o.is_object()) throw ValidationError("field \"output\" must be an object");
        detail::reject_unknown_keys(o, {"path", "format"}, "output");
        if (o.contains("path")) {
            if (!o["path"].is_string()) throw ValidationError("field \"path\" must be a string");
            spec.output.path = o["path"].get<std::string>();
        }
        if (o.contains("format")) {
            if (!o["format"].is_string()) throw ValidationError("field \"format\" must be a string");
            spec.output.format = parse_format(o["format"].get<std::string>());
        }
    }

    if (j.contains("orbit_tolerance")) {
        spec.orbit_tolerance = detail::require_number(j["orbit_tolerance"], "orbit_tolerance");
        if (!(spec.orbit_tolerance > 0.0))
            throw ValidationError("field \"orbit_tolerance\" must be positive");
    }
    return spec;
}

/// Reads and parses a configuration file.
inline ClusterSpec load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

/// Everything derived from a ClusterSpec up to the constraint system.
struct Pipeline {
    GeneratorSet gens;
    std::vector<OrbitPoints> shells;
    Cluster cluster;
    Embedding emb;
    StripConstraintSet cs;
};

inline Pipeline build_pipeline(const ClusterSpec& spec) {
    Pipeline p;
    switch (spec.group) {
        case GroupKind::dihedral: p.gens = dihedral_generators(spec.m); break;
        case GroupKind::icosahedral: p.gens = icosahedral_generators(); break;
        case GroupKind::linear: p.gens = inversion_generators(); break;
    }
    for (const Vector& seed : spec.shells)
        p.shells.push_back(orbit(p.gens, seed, spec.orbit_tolerance));
    p.cluster = build_cluster(p.shells);
    p.emb = build_embedding(p.cluster);
    if (!spec.offset.empty() && spec.offset.size() != static_cast<std::size_t>(p.emb.k))
        throw ValidationError("field \"offset\" must have length " + std::to_string(p.emb.k) +
                              " (one entry per half point)");
    p.cs = build_constraints(p.emb, spec.offset);
    return p;
}

}  // namespace quasipack
