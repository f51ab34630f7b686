#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "quasipack/config.hpp"
#include "quasipack/enumerate.hpp"
#include "quasipack/errors.hpp"

namespace quasipack {

namespace detail {

// shortest decimal text that parses back to the exact double
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string fingerprint_hex(std::uint64_t fp) {
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[fp & 0xF];
        fp >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace detail

/// Writes a packing as CSV: a comment header recording n, k, point count and
/// the embedding fingerprint, a column-name row, then one row per point with
/// the physical coordinates (shortest round-trip decimals), the lattice
/// integers and the occupancy count.
inline void export_packing_csv(const Packing& p, std::ostream& os) {
    os << "# n=" << p.n << " k=" << p.k << " points=" << p.points.size()
       << " fingerprint=" << detail::fingerprint_hex(p.emb_fingerprint) << "\n";
    for (int i = 0; i < p.n; ++i) os << "p" << (i + 1) << ",";
    for (int j = 0; j < p.k; ++j) os << "x" << (j + 1) << ",";
    os << "occupancy\n";
    for (const PackingPoint& pt : p.points) {
        for (double c : pt.physical) os << detail::format_double(c) << ",";
        for (std::int32_t c : pt.lattice) os << c << ",";
        os << pt.occupancy_count() << "\n";
    }
}

/// JSON export mirroring the CSV fields.
inline void export_packing_json(const Packing& p, std::ostream& os) {
    nlohmann::json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["points"] = p.points.size();
    j["fingerprint"] = detail::fingerprint_hex(p.emb_fingerprint);
    nlohmann::json rows = nlohmann::json::array();
    for (const PackingPoint& pt : p.points) {
        nlohmann::json row;
        row["physical"] = pt.physical;
        row["lattice"] = pt.lattice;
        row["occupancy"] = pt.occupancy_count();
        rows.push_back(std::move(row));
    }
    j["data"] = std::move(rows);
    os << j.dump(1) << "\n";
}

inline void export_packing(const Packing& p, std::ostream& os, ExportFormat fmt) {
    if (fmt == ExportFormat::csv)
        export_packing_csv(p, os);
    else
        export_packing_json(p, os);
}

inline void export_packing(const Packing& p, const std::filesystem::path& path,
                           ExportFormat fmt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    export_packing(p, out, fmt);
    out.flush();
    if (!out) throw Error("write failed: " + path.string());
}

/// A packing file's raw content, before any recomputation.
struct PackingFile {
    int n = 0;
    int k = 0;
    std::uint64_t fingerprint = 0;
    std::vector<Vector> physical;
    std::vector<LatticeVector> lattice;
    std::vector<int> occupancy_counts;
};

namespace detail {

inline double parse_double_token(const std::string& tok, int line_no) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw ParseError("bad numeric field \"" + tok + "\"", line_no, 1);
    return v;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

inline PackingFile read_packing_csv(std::istream& is) {
    PackingFile f;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "n") f.n = std::stoi(val);
                if (key == "k") f.k = std::stoi(val);
                if (key == "fingerprint") f.fingerprint = std::stoull(val, nullptr, 16);
            }
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError("missing header line", line_no, 1);
        if (line[0] == 'p') continue;  // column names
        const auto toks = detail::split_csv(line);
        if (toks.size() != static_cast<std::size_t>(f.n + f.k + 1))
            throw ParseError("wrong column count", line_no, 1);
        Vector phys;
        LatticeVector lat;
        for (int i = 0; i < f.n; ++i)
            phys.push_back(detail::parse_double_token(toks[static_cast<std::size_t>(i)], line_no));
        for (int j = 0; j < f.k; ++j)
            lat.push_back(static_cast<std::int32_t>(
                detail::parse_double_token(toks[static_cast<std::size_t>(f.n + j)], line_no)));
        f.occupancy_counts.push_back(static_cast<int>(
            detail::parse_double_token(toks[static_cast<std::size_t>(f.n + f.k)], line_no)));
        f.physical.push_back(std::move(phys));
        f.lattice.push_back(std::move(lat));
    }
    return f;
}

inline PackingFile read_packing_json(std::istream& is) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    PackingFile f;
    f.n = j.at("n").get<int>();
    f.k = j.at("k").get<int>();
    f.fingerprint = std::stoull(j.at("fingerprint").get<std::string>(), nullptr, 16);
    for (const auto& row : j.at("data")) {
        f.physical.push_back(row.at("physical").get<Vector>());
        f.lattice.push_back(row.at("lattice").get<LatticeVector>());
        f.occupancy_counts.push_back(row.at("occupancy").get<int>());
    }
    return f;
}

inline PackingFile read_packing_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path.string());
    if (path.extension() == ".json") return read_packing_json(in);
    return read_packing_csv(in);
}

/// Reconstructs a full Packing from an exported file and the constraint
/// system it was generated with. Physical projections and occupancy are
/// recomputed from the lattice vectors; the stored values are validated.
inline Packing import_packing(const std::filesystem::path& path, const StripConstraintSet& cs,
                              const Embedding& emb) {
    const PackingFile f = read_packing_file(path);
    if (f.n != emb.n || f.k != emb.k)
        throw ValidationError("packing file dimensions do not match embedding");
    if (f.fingerprint != fingerprint(emb))
        throw ValidationError("packing file fingerprint does not match embedding");
    Packing p;
    p.n = f.n;
    p.k = f.k;
    p.emb_fingerprint = f.fingerprint;
    for (std::size_t i = 0; i < f.lattice.size(); ++i) {
        PackingPoint pt;
        pt.lattice = f.lattice[i];
        pt.physical = project_physical(emb, pt.lattice);
        pt.occupancy = occupancy_profile(cs, pt.lattice);
        if (pt.occupancy_count() != f.occupancy_counts[i])
            throw ValidationError("occupancy count mismatch in packing file");
        p.points.push_back(std::move(pt));
    }
    return p;
}

}  // namespace quasipack
