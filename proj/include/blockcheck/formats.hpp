/**
 * @file formats.hpp
 * @brief File formats (v1) for groups, character tables, corpus
 *        expectations, and check reports.
 *
 * All formats are JSON with a fixed field order and a "format" version tag.
 * Integers of group scale (orders, sizes, degrees, character values,
 * witnesses) are serialised as decimal strings so the formats themselves
 * put no bound on them; small structural integers (indices, conductors,
 * primes, defects, permutation images, field codes) are plain JSON
 * numbers.  Group files are self-certifying: any metadata they carry is
 * recomputed and cross-checked at load time.
 *
 * Part of blockcheck, an exact character-table and p-block verification
 * toolkit for desk-scale finite groups.
 *
 * Distributed under the MIT license; see LICENSE.
 */

#ifndef BLOCKCHECK_FORMATS_HPP
#define BLOCKCHECK_FORMATS_HPP

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <map>
#include <vector>

#include "json.hpp"

#include "blockcheck/element.hpp"
#include "blockcheck/errors.hpp"
#include "blockcheck/group.hpp"
#include "blockcheck/partitions.hpp"
#include "blockcheck/report.hpp"
#include "blockcheck/smallfield.hpp"
#include "blockcheck/table.hpp"

namespace blockcheck {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char *kGroupFormat = "blockcheck-group/v1";
inline constexpr const char *kTableFormat = "blockcheck-table/v1";
inline constexpr const char *kExpectationsFormat = "blockcheck-expectations/v1";
inline constexpr const char *kReportFormat = "blockcheck-report/v1";
inline constexpr const char *kSurveyFormat = "blockcheck-survey/v1";

/// Serialises an integer as a decimal string (format rule for group-scale
/// quantities).
inline std::string dec(i64 v) { return std::to_string(v); }

/// Parses a decimal string, rejecting anything but a full signed integer.
inline i64 parse_dec(const std::string &s) {
    i64 v = 0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || s.empty())
        throw ParseError("bad decimal integer '" + s + "'");
    return v;
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IOError("short write to '" + path + "'");
}

namespace detail {

inline ordered_json parse_json(const std::string &text, const std::string &what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
    return j;
}

inline const ordered_json &field(const ordered_json &j, const char *name,
                                 const std::string &what) {
    if (!j.is_object())
        throw ParseError(what + ": expected an object around '" + name + "'");
    auto it = j.find(name);
    if (it == j.end())
        throw ParseError(what + ": missing field '" + name + "'");
    return *it;
}

inline std::string str_field(const ordered_json &j, const char *name,
                             const std::string &what) {
    const ordered_json &f = field(j, name, what);
    if (!f.is_string())
        throw ParseError(what + ": field '" + name + "' must be a string");
    return f.get<std::string>();
}

inline i64 int_field(const ordered_json &j, const char *name,
                     const std::string &what) {
    const ordered_json &f = field(j, name, what);
    if (!f.is_number_integer())
        throw ParseError(what + ": field '" + name + "' must be an integer");
    return f.get<i64>();
}

inline i64 dec_field(const ordered_json &j, const char *name,
                     const std::string &what) {
    return parse_dec(str_field(j, name, what));
}

inline void expect_format(const ordered_json &j, const char *tag,
                          const std::string &what) {
    if (str_field(j, "format", what) != tag)
        throw ParseError(what + ": expected format tag '" + std::string(tag) + "'");
}

/// JSON -> permutation element (1-based image list in the file).
inline Element parse_perm(const ordered_json &j, int degree, const std::string &what) {
    if (!j.is_array() || static_cast<int>(j.size()) != degree)
        throw ParseError(what + ": permutation must list " + std::to_string(degree) +
                         " images");
    Element e;
    for (const ordered_json &img : j) {
        if (!img.is_number_integer())
            throw ParseError(what + ": permutation image must be an integer");
        const i64 v = img.get<i64>();
        if (v < 1 || v > degree)
            throw ParseError(what + ": permutation image out of range");
        e.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return e;
}

inline ordered_json perm_to_json(const Element &e) {
    ordered_json a = ordered_json::array();
    for (std::uint8_t img : e) a.push_back(static_cast<int>(img) + 1);
    return a;
}

/// JSON -> matrix element (rows of field element codes).
inline Element parse_matrix(const ordered_json &j, int degree, i64 q,
                            const std::string &what) {
    if (!j.is_array() || static_cast<int>(j.size()) != degree)
        throw ParseError(what + ": matrix must have " + std::to_string(degree) +
                         " rows");
    Element e;
    for (const ordered_json &row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != degree)
            throw ParseError(what + ": matrix row has wrong length");
        for (const ordered_json &entry : row) {
            if (!entry.is_number_integer())
                throw ParseError(what + ": matrix entry must be an integer");
            const i64 v = entry.get<i64>();
            if (v < 0 || v >= q)
                throw ParseError(what + ": matrix entry is not a field element code");
            e.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return e;
}

inline ordered_json matrix_to_json(const Element &e, int degree) {
    ordered_json m = ordered_json::array();
    for (int i = 0; i < degree; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < degree; ++j)
            row.push_back(static_cast<int>(
                e[static_cast<std::size_t>(i * degree + j)]));
        m.push_back(std::move(row));
    }
    return m;
}

inline ordered_json cycle_types_to_json(const std::vector<Partition> &types) {
    ordered_json a = ordered_json::array();
    for (const Partition &mu : types) {
        ordered_json t = ordered_json::array();
        for (i64 part : mu) t.push_back(part);
        a.push_back(std::move(t));
    }
    return a;
}

inline std::vector<Partition> parse_cycle_types(const ordered_json &j,
                                                const std::string &what) {
    if (!j.is_array())
        throw ParseError(what + ": class_cycle_types must be an array");
    std::vector<Partition> out;
    for (const ordered_json &t : j) {
        if (!t.is_array())
            throw ParseError(what + ": cycle type must be an array");
        Partition mu;
        for (const ordered_json &part : t) {
            if (!part.is_number_integer() || part.get<i64>() < 1)
                throw ParseError(what + ": cycle type parts must be positive integers");
            mu.push_back(part.get<i64>());
        }
        if (!is_partition(mu))
            throw ParseError(what + ": cycle type parts must be weakly decreasing");
        out.push_back(std::move(mu));
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Group files
// ---------------------------------------------------------------------------

/// Everything needed to write a group file.  Metadata values are whatever
/// the generator of the file computed; load_group re-derives and checks
/// them.
struct GroupFileData {
    std::string name;
    GroupContext ctx;
    std::vector<Element> generators;
    i64 expected_order = 0;          ///< 0 = omit from the file
    i64 expected_center_order = -1;  ///< -1 = omit from the file
    bool has_projection = false;
    int projection_degree = 0;
    std::vector<Element> projection_images; ///< one permutation per generator
    std::vector<Partition> class_cycle_types; ///< one per class, engine order
};

/// A group loaded from a file, with any certified projection labels.
struct LoadedGroup {
    std::string name;
    FiniteGroup group;
    bool has_projection = false;
    std::vector<Partition> class_cycle_types; ///< one per class when present
};

inline ordered_json group_to_json(const GroupFileData &g) {
    const std::string what = "group '" + g.name + "'";
    ordered_json j;
    j["format"] = kGroupFormat;
    j["name"] = g.name;
    if (g.ctx.kind == GroupContext::Kind::Perm) {
        j["kind"] = "perm";
        j["degree"] = g.ctx.degree;
    } else {
        j["kind"] = "matrix";
        if (!g.ctx.field) throw Error(what + ": matrix context without a field");
        ordered_json f;
        f["characteristic"] = g.ctx.field->characteristic();
        f["degree"] = g.ctx.field->degree();
        ordered_json poly = ordered_json::array();
        for (i64 c : g.ctx.field->defining_polynomial()) poly.push_back(c);
        f["polynomial"] = std::move(poly);
        j["field"] = std::move(f);
        j["degree"] = g.ctx.degree;
    }
    ordered_json gens = ordered_json::array();
    for (const Element &e : g.generators)
        gens.push_back(g.ctx.kind == GroupContext::Kind::Perm
                           ? detail::perm_to_json(e)
                           : detail::matrix_to_json(e, g.ctx.degree));
    j["generators"] = std::move(gens);

    ordered_json meta;
    if (g.expected_order > 0) meta["expected_order"] = dec(g.expected_order);
    if (g.expected_center_order >= 0)
        meta["expected_center_order"] = dec(g.expected_center_order);
    if (g.has_projection) {
        ordered_json proj;
        proj["kind"] = "perm";
        proj["degree"] = g.projection_degree;
        ordered_json imgs = ordered_json::array();
        for (const Element &e : g.projection_images)
            imgs.push_back(detail::perm_to_json(e));
        proj["generator_images"] = std::move(imgs);
        meta["projection"] = std::move(proj);
        // The stated labels are optional; load_group recomputes them from
        // the projection either way, so an empty list is simply omitted.
        if (!g.class_cycle_types.empty())
            meta["class_cycle_types"] =
                detail::cycle_types_to_json(g.class_cycle_types);
    }
    if (!meta.empty()) j["metadata"] = std::move(meta);
    return j;
}

inline void save_group(const GroupFileData &g, const std::string &path) {
    write_text_file(path, group_to_json(g).dump(2) + "\n");
}

/// Parses, builds, and cross-checks a group file.  Metadata must agree
/// with the engine (MetadataMismatch otherwise); a projection, when
/// present, is certified edge-by-edge as a genuine homomorphism and the
/// class labels are recomputed from it.
inline LoadedGroup load_group_from_json(const ordered_json &j, const std::string &what) {
    detail::expect_format(j, kGroupFormat, what);
    const std::string name = detail::str_field(j, "name", what);
    if (name.empty()) throw ParseError(what + ": empty group name");
    const std::string kind = detail::str_field(j, "kind", what);

    GroupContext ctx;
    if (kind == "perm") {
        ctx.kind = GroupContext::Kind::Perm;
        const i64 degree = detail::int_field(j, "degree", what);
        if (degree < 1 || degree > 255)
            throw ParseError(what + ": permutation degree must be in 1..255");
        ctx.degree = static_cast<int>(degree);
    } else if (kind == "matrix") {
        ctx.kind = GroupContext::Kind::Matrix;
        const ordered_json &f = detail::field(j, "field", what);
        const i64 p = detail::int_field(f, "characteristic", what);
        const i64 k = detail::int_field(f, "degree", what);
        if (p < 2 || k < 1) throw ParseError(what + ": bad field parameters");
        std::vector<i64> poly;
        if (f.contains("polynomial")) {
            const ordered_json &pj = f["polynomial"];
            if (!pj.is_array())
                throw ParseError(what + ": field polynomial must be an array");
            for (const ordered_json &c : pj) {
                if (!c.is_number_integer() || c.get<i64>() < 0 || c.get<i64>() >= p)
                    throw ParseError(what + ": field polynomial coefficients must lie in 0..p-1");
                poly.push_back(c.get<i64>());
            }
        } else if (k > 1) {
            throw ParseError(what + ": extension field requires a defining polynomial");
        }
        ctx.field = get_field(p, k, std::move(poly));
        const i64 degree = detail::int_field(j, "degree", what);
        if (degree < 1 || degree > 15)
            throw ParseError(what + ": matrix degree must be in 1..15");
        ctx.degree = static_cast<int>(degree);
    } else {
        throw ParseError(what + ": kind must be 'perm' or 'matrix'");
    }

    const ordered_json &gens_json = detail::field(j, "generators", what);
    if (!gens_json.is_array() || gens_json.empty())
        throw ParseError(what + ": need a non-empty generator list");
    std::vector<Element> gens;
    for (const ordered_json &gj : gens_json)
        gens.push_back(ctx.kind == GroupContext::Kind::Perm
                           ? detail::parse_perm(gj, ctx.degree, what)
                           : detail::parse_matrix(gj, ctx.degree,
                                                  static_cast<i64>(ctx.field->size()), what));

    LoadedGroup out{name, FiniteGroup(ctx, std::move(gens)), false, {}};
    out.group.set_name(name);

    if (!j.contains("metadata")) return out;
    const ordered_json &meta = j["metadata"];
    if (!meta.is_object()) throw ParseError(what + ": metadata must be an object");

    if (meta.contains("expected_order")) {
        const i64 want = parse_dec(meta["expected_order"].get<std::string>());
        if (want != out.group.order())
            throw MetadataMismatch(what + ": expected order " + dec(want) +
                                   " but the generators produce " + dec(out.group.order()));
    }
    if (meta.contains("expected_center_order")) {
        const i64 want = parse_dec(meta["expected_center_order"].get<std::string>());
        const i64 got = static_cast<i64>(out.group.center_indices().size());
        if (want != got)
            throw MetadataMismatch(what + ": expected center order " + dec(want) +
                                   " but the engine computes " + dec(got));
    }
    if (meta.contains("projection")) {
        const ordered_json &proj = meta["projection"];
        if (detail::str_field(proj, "kind", what) != "perm")
            throw ParseError(what + ": only permutation projections are supported");
        const i64 pd = detail::int_field(proj, "degree", what);
        if (pd < 1 || pd > 255)
            throw ParseError(what + ": projection degree must be in 1..255");
        GroupContext img_ctx;
        img_ctx.kind = GroupContext::Kind::Perm;
        img_ctx.degree = static_cast<int>(pd);
        const ordered_json &imgs_json = detail::field(proj, "generator_images", what);
        if (!imgs_json.is_array())
            throw ParseError(what + ": generator_images must be an array");
        std::vector<Element> img_gens;
        for (const ordered_json &ij : imgs_json)
            img_gens.push_back(detail::parse_perm(ij, img_ctx.degree, what));
        // Certifies the assignment extends to a homomorphism.
        const std::vector<Element> images =
            homomorphism_images(out.group, img_ctx, img_gens);
        out.has_projection = true;
        for (std::size_t k = 0; k < out.group.class_count(); ++k)
            out.class_cycle_types.push_back(
                cycle_type(images[out.group.cls(k).rep]));
        if (meta.contains("class_cycle_types")) {
            const std::vector<Partition> stated =
                detail::parse_cycle_types(meta["class_cycle_types"], what);
            if (stated != out.class_cycle_types)
                throw MetadataMismatch(
                    what + ": stated class_cycle_types disagree with the projection");
        }
    } else if (meta.contains("class_cycle_types")) {
        throw MetadataMismatch(what +
                               ": class_cycle_types require a projection to certify them");
    }
    return out;
}

inline LoadedGroup load_group(const std::string &path) {
    const std::string what = "group file " + path;
    return load_group_from_json(detail::parse_json(read_text_file(path), what), what);
}

// ---------------------------------------------------------------------------
// Table files
// ---------------------------------------------------------------------------

inline ordered_json table_to_json(const CharacterTable &T) {
    ordered_json j;
    j["format"] = kTableFormat;
    j["group"] = T.group_name;
    j["order"] = dec(T.order);
    j["exponent"] = dec(T.exponent);
    ordered_json classes = ordered_json::array();
    for (const ClassInfo &c : T.classes) {
        ordered_json cj;
        cj["order"] = dec(c.order);
        cj["size"] = dec(c.size);
        ordered_json pm = ordered_json::array();
        for (std::uint32_t t : c.power_map) pm.push_back(t);
        cj["power_map"] = std::move(pm);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    ordered_json rows = ordered_json::array();
    for (const CharRow &row : T.rows) {
        ordered_json rj;
        rj["degree"] = dec(row.degree);
        ordered_json vals = ordered_json::array();
        for (const Cyclo &v : row.values) {
            ordered_json vj;
            vj["conductor"] = v.conductor();
            ordered_json coeffs = ordered_json::array();
            for (i64 c : v.coeffs()) coeffs.push_back(dec(c));
            vj["coefficients"] = std::move(coeffs);
            vals.push_back(std::move(vj));
        }
        rj["values"] = std::move(vals);
        rows.push_back(std::move(rj));
    }
    j["characters"] = std::move(rows);
    return j;
}

inline void save_table(const CharacterTable &T, const std::string &path) {
    write_text_file(path, table_to_json(T).dump(2) + "\n");
}

inline CharacterTable table_from_json(const ordered_json &j, const std::string &what) {
    detail::expect_format(j, kTableFormat, what);
    CharacterTable T;
    T.group_name = detail::str_field(j, "group", what);
    T.order = detail::dec_field(j, "order", what);
    T.exponent = detail::dec_field(j, "exponent", what);
    const ordered_json &classes = detail::field(j, "classes", what);
    if (!classes.is_array() || classes.empty())
        throw ParseError(what + ": need a non-empty class list");
    for (const ordered_json &cj : classes) {
        ClassInfo c;
        c.order = detail::dec_field(cj, "order", what);
        c.size = detail::dec_field(cj, "size", what);
        const ordered_json &pm = detail::field(cj, "power_map", what);
        if (!pm.is_array() || static_cast<i64>(pm.size()) != c.order)
            throw ParseError(what + ": power_map must list one class per exponent");
        for (const ordered_json &t : pm) {
            if (!t.is_number_integer() || t.get<i64>() < 0 ||
                t.get<i64>() >= static_cast<i64>(classes.size()))
                throw ParseError(what + ": power_map entry out of range");
            c.power_map.push_back(static_cast<std::uint32_t>(t.get<i64>()));
        }
        T.classes.push_back(std::move(c));
    }
    const ordered_json &rows = detail::field(j, "characters", what);
    if (!rows.is_array())
        throw ParseError(what + ": characters must be an array");
    for (const ordered_json &rj : rows) {
        CharRow row;
        row.degree = detail::dec_field(rj, "degree", what);
        const ordered_json &vals = detail::field(rj, "values", what);
        if (!vals.is_array() || vals.size() != T.classes.size())
            throw ParseError(what + ": need one value per class");
        for (const ordered_json &vj : vals) {
            const i64 e = detail::int_field(vj, "conductor", what);
            const ordered_json &coeffs = detail::field(vj, "coefficients", what);
            if (!coeffs.is_array())
                throw ParseError(what + ": coefficients must be an array");
            std::vector<i64> c;
            for (const ordered_json &x : coeffs) {
                if (!x.is_string())
                    throw ParseError(what + ": coefficients must be decimal strings");
                c.push_back(parse_dec(x.get<std::string>()));
            }
            row.values.emplace_back(e, std::move(c));
        }
        T.rows.push_back(std::move(row));
    }
    return T;
}

/// Loads a table file and accepts it only after the full orthogonality
/// relations pass (OrthogonalityFailure otherwise).
inline CharacterTable load_table(const std::string &path) {
    const std::string what = "table file " + path;
    CharacterTable T =
        table_from_json(detail::parse_json(read_text_file(path), what), what);
    verify_orthogonality(T);
    return T;
}

// ---------------------------------------------------------------------------
// Expectations files
// ---------------------------------------------------------------------------

/// Expected outcome of one (group, check, prime) cell of the survey.
/// prime 0 marks prime-independent checks (wilde, condition-star).
struct ExpectationEntry {
    std::string group;
    std::string check;
    i64 prime = 0;
    std::string status = "PASS"; ///< "PASS" | "FAIL" | "NA"
    bool has_witness = false;
    i64 witness_block_defect = -1;
    i64 witness_exponent = -1;
};

struct Expectations {
    std::vector<std::string> groups; ///< every corpus group, sorted
    std::string default_status = "PASS";
    std::map<std::tuple<std::string, std::string, i64>, ExpectationEntry> entries;

    /// Expected status for a cell; entries override the default.
    const ExpectationEntry *find(const std::string &group, const std::string &check,
                                 i64 prime) const {
        auto it = entries.find(std::make_tuple(group, check, prime));
        return it == entries.end() ? nullptr : &it->second;
    }
};

inline ordered_json expectations_to_json(const Expectations &x) {
    ordered_json j;
    j["format"] = kExpectationsFormat;
    j["default"] = x.default_status;
    ordered_json groups = ordered_json::array();
    std::vector<std::string> names = x.groups;
    std::sort(names.begin(), names.end());
    for (const std::string &n : names) groups.push_back(n);
    j["groups"] = std::move(groups);
    ordered_json entries = ordered_json::array();
    for (const auto &[key, e] : x.entries) {
        ordered_json ej;
        ej["group"] = e.group;
        ej["check"] = e.check;
        ej["prime"] = e.prime;
        ej["status"] = e.status;
        if (e.has_witness) {
            ordered_json w;
            w["block_defect"] = e.witness_block_defect;
            w["exponent"] = dec(e.witness_exponent);
            ej["witness"] = std::move(w);
        }
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline void save_expectations(const Expectations &x, const std::string &path) {
    write_text_file(path, expectations_to_json(x).dump(2) + "\n");
}

inline Expectations load_expectations(const std::string &path) {
    const std::string what = "expectations file " + path;
    const ordered_json j = detail::parse_json(read_text_file(path), what);
    detail::expect_format(j, kExpectationsFormat, what);
    Expectations x;
    x.default_status = detail::str_field(j, "default", what);
    const ordered_json &groups = detail::field(j, "groups", what);
    if (!groups.is_array() || groups.empty())
        throw ParseError(what + ": need a non-empty group list");
    for (const ordered_json &g : groups) {
        if (!g.is_string()) throw ParseError(what + ": group names must be strings");
        x.groups.push_back(g.get<std::string>());
    }
    std::sort(x.groups.begin(), x.groups.end());
    if (std::adjacent_find(x.groups.begin(), x.groups.end()) != x.groups.end())
        throw ParseError(what + ": duplicate group name");
    const ordered_json &entries = detail::field(j, "entries", what);
    if (!entries.is_array())
        throw ParseError(what + ": entries must be an array");
    for (const ordered_json &ej : entries) {
        ExpectationEntry e;
        e.group = detail::str_field(ej, "group", what);
        e.check = detail::str_field(ej, "check", what);
        e.prime = detail::int_field(ej, "prime", what);
        e.status = detail::str_field(ej, "status", what);
        if (e.status != "PASS" && e.status != "FAIL" && e.status != "NA")
            throw ParseError(what + ": status must be PASS, FAIL, or NA");
        if (!std::binary_search(x.groups.begin(), x.groups.end(), e.group))
            throw ParseError(what + ": entry for unknown group '" + e.group + "'");
        if (ej.contains("witness")) {
            const ordered_json &w = ej["witness"];
            e.has_witness = true;
            e.witness_block_defect = detail::int_field(w, "block_defect", what);
            e.witness_exponent = detail::dec_field(w, "exponent", what);
        }
        auto key = std::make_tuple(e.group, e.check, e.prime);
        if (!x.entries.emplace(key, e).second)
            throw ParseError(what + ": duplicate entry for (" + e.group + ", " +
                             e.check + ", p=" + dec(e.prime) + ")");
    }
    return x;
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

inline ordered_json violation_to_json(const Violation &v) {
    ordered_json j;
    j["character_index"] = v.character_index;
    j["character_degree"] = dec(v.character_degree);
    j["class_index"] = v.class_index;
    j["class_order"] = dec(v.class_order);
    j["lhs"] = dec(v.lhs);
    j["rhs"] = dec(v.rhs);
    j["block_defect"] = v.block_defect;
    j["character_defect"] = v.character_defect;
    j["exponent"] = dec(v.exponent);
    j["note"] = v.note;
    return j;
}

inline ordered_json report_to_json(const CheckReport &r) {
    ordered_json j;
    j["check"] = r.check;
    j["group"] = r.group;
    j["prime"] = r.prime;
    j["status"] = r.status();
    j["applicable"] = r.applicable;
    j["reason"] = r.reason;
    ordered_json vs = ordered_json::array();
    for (const Violation &v : r.violations) vs.push_back(violation_to_json(v));
    j["violations"] = std::move(vs);
    return j;
}

/// One human-readable line per report, used for the summary section and
/// for terminal output.
inline std::string report_summary_line(const CheckReport &r) {
    std::string line = r.status() + " " + r.check + " " + r.group;
    if (r.prime > 0) line += " p=" + dec(r.prime);
    if (!r.applicable) {
        line += " -- " + r.reason;
    } else if (!r.violations.empty()) {
        line += " (" + dec(static_cast<i64>(r.violations.size())) +
                (r.violations.size() == 1 ? " violation)" : " violations)");
    }
    return line;
}

/// Assembles the machine-readable report document with its human-readable
/// summary section.  Ordering is exactly the order of `reports`.
inline ordered_json report_document(const std::vector<CheckReport> &reports) {
    ordered_json j;
    j["format"] = kReportFormat;
    ordered_json rs = ordered_json::array();
    ordered_json summary = ordered_json::array();
    for (const CheckReport &r : reports) {
        rs.push_back(report_to_json(r));
        summary.push_back(report_summary_line(r));
    }
    j["reports"] = std::move(rs);
    j["summary"] = std::move(summary);
    return j;
}

inline void emit_report(const std::vector<CheckReport> &reports,
                        const std::string &path) {
    write_text_file(path, report_document(reports).dump(2) + "\n");
}

} // namespace blockcheck

#endif // BLOCKCHECK_FORMATS_HPP
