#include "instance.hpp"

#include <json.hpp>

#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace homcolor {

namespace {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();  // beyond 64 bits: decimal string
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error("expected an integer or a decimal string");
}

json rat_to_json(const Rat& r) { return json::array({int_to_json(numerator(r)), int_to_json(denominator(r))}); }

Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw validation_error("expected a [numerator, denominator] pair");
    return make_rat(int_from_json(j[0]), int_from_json(j[1]));
}

json vec2_to_json(const Vec2& v) {
    return json::array({int_to_json(numerator(v.x)), int_to_json(denominator(v.x)),
                        int_to_json(numerator(v.y)), int_to_json(denominator(v.y))});
}

Vec2 vec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw validation_error("expected an [xn, xd, yn, yd] quadruple");
    return Vec2{make_rat(int_from_json(j[0]), int_from_json(j[1])),
                make_rat(int_from_json(j[2]), int_from_json(j[3]))};
}

json range_to_json(const ConvexRange& range) {
    json verts = json::array();
    for (const Vec2& v : range.vertices()) verts.push_back(vec2_to_json(v));
    return json{{"vertices", std::move(verts)}};
}

ConvexRange range_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw validation_error("range needs a \"vertices\" array");
    std::vector<Vec2> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(vec2_from_json(v));
    return ConvexRange(std::move(verts));
}

json homothet_to_json(const std::string& label, const Homothet& h) {
    return json{{"label", label},
                {"center", vec2_to_json(h.center)},
                {"scaling", rat_to_json(h.scaling)}};
}

}  // namespace

std::string kind_name(InstanceKind k) {
    switch (k) {
        case InstanceKind::Primal: return "primal";
        case InstanceKind::Dual: return "dual";
        case InstanceKind::Realizer3d: return "realizer3d";
    }
    return "?";
}

std::vector<std::string> Instance::labels() const {
    std::vector<std::string> out;
    switch (kind) {
        case InstanceKind::Primal:
            for (const auto& p : points) out.push_back(p.label);
            break;
        case InstanceKind::Dual:
            for (const auto& m : family.members) out.push_back(m.label);
            break;
        case InstanceKind::Realizer3d:
            for (const auto& p : realizer) out.push_back(p.label);
            break;
    }
    return out;
}

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw validation_error(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw validation_error("instance needs a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();

    Instance inst;
    if (kind == "primal") {
        inst.kind = InstanceKind::Primal;
        inst.range = range_from_json(j.at("range"));
        std::set<std::string> seen;
        for (const auto& p : j.at("points")) {
            LabeledPoint lp{p.at("label").get<std::string>(), vec2_from_json(p.at("point"))};
            if (!seen.insert(lp.label).second)
                throw validation_error("duplicate label: " + lp.label);
            inst.points.push_back(std::move(lp));
        }
    } else if (kind == "dual") {
        inst.kind = InstanceKind::Dual;
        inst.range = range_from_json(j.at("range"));
        std::set<std::string> seen;
        for (const auto& m : j.at("homothets")) {
            LabeledHomothet lh{m.at("label").get<std::string>(),
                               Homothet{vec2_from_json(m.at("center")),
                                        rat_from_json(m.at("scaling"))}};
            if (lh.h.scaling <= 0) throw validation_error("homothet scaling must be positive");
            if (!seen.insert(lh.label).second)
                throw validation_error("duplicate label: " + lh.label);
            inst.family.members.push_back(std::move(lh));
        }
    } else if (kind == "realizer3d") {
        inst.kind = InstanceKind::Realizer3d;
        std::set<std::string> seen;
        for (const auto& p : j.at("points")) {
            LabeledPoint3 lp{p.at("label").get<std::string>(),
                             Vec3{rat_from_json(p.at("x")), rat_from_json(p.at("y")),
                                  rat_from_json(p.at("z"))}};
            if (!seen.insert(lp.label).second)
                throw validation_error("duplicate label: " + lp.label);
            inst.realizer.push_back(std::move(lp));
        }
    } else {
        throw validation_error("unknown instance kind: " + kind);
    }

    if (j.contains("lowerbound")) {
        const json& lb = j.at("lowerbound");
        Instance::LowerBoundBlock block;
        block.k = lb.at("k").get<int>();
        block.bound = lb.at("bound").get<int>();
        block.weak_variant = lb.value("weak_variant", false);
        for (const auto& c : lb.at("clusters")) {
            std::vector<std::size_t> cluster;
            for (const auto& i : c) cluster.push_back(i.get<std::size_t>());
            block.clusters.push_back(std::move(cluster));
        }
        if (lb.contains("witness_ranges"))
            for (const auto& w : lb.at("witness_ranges"))
                block.witness_ranges.push_back(
                    Homothet{vec2_from_json(w.at("center")), rat_from_json(w.at("scaling"))});
        if (lb.contains("witness_points"))
            for (const auto& w : lb.at("witness_points"))
                block.witness_points.push_back(vec2_from_json(w));
        inst.lowerbound = std::move(block);
    }
    return inst;
}

std::string write_instance(const Instance& inst) {
    json j;
    j["kind"] = kind_name(inst.kind);
    switch (inst.kind) {
        case InstanceKind::Primal: {
            j["range"] = range_to_json(*inst.range);
            json pts = json::array();
            for (const auto& p : inst.points)
                pts.push_back(json{{"label", p.label}, {"point", vec2_to_json(p.p)}});
            j["points"] = std::move(pts);
            break;
        }
        case InstanceKind::Dual: {
            j["range"] = range_to_json(*inst.range);
            json hs = json::array();
            for (const auto& m : inst.family.members) hs.push_back(homothet_to_json(m.label, m.h));
            j["homothets"] = std::move(hs);
            break;
        }
        case InstanceKind::Realizer3d: {
            json pts = json::array();
            for (const auto& p : inst.realizer)
                pts.push_back(json{{"label", p.label},
                                   {"x", rat_to_json(p.p.x)},
                                   {"y", rat_to_json(p.p.y)},
                                   {"z", rat_to_json(p.p.z)}});
            j["points"] = std::move(pts);
            break;
        }
    }
    if (inst.lowerbound) {
        const auto& block = *inst.lowerbound;
        json lb;
        lb["k"] = block.k;
        lb["bound"] = block.bound;
        lb["weak_variant"] = block.weak_variant;
        json clusters = json::array();
        for (const auto& c : block.clusters) {
            json arr = json::array();
            for (std::size_t i : c) arr.push_back(i);
            clusters.push_back(std::move(arr));
        }
        lb["clusters"] = std::move(clusters);
        if (!block.witness_ranges.empty()) {
            json ws = json::array();
            for (const Homothet& w : block.witness_ranges)
                ws.push_back(json{{"center", vec2_to_json(w.center)},
                                  {"scaling", rat_to_json(w.scaling)}});
            lb["witness_ranges"] = std::move(ws);
        }
        if (!block.witness_points.empty()) {
            json ws = json::array();
            for (const Vec2& w : block.witness_points) ws.push_back(vec2_to_json(w));
            lb["witness_points"] = std::move(ws);
        }
        j["lowerbound"] = std::move(lb);
    }
    return j.dump(2) + "\n";
}

Instance instance_from_lowerbound(const LowerBoundInstance& lb) {
    Instance inst;
    inst.range = lb.range;
    Instance::LowerBoundBlock block;
    block.k = lb.k;
    block.bound = lb.bound;
    block.weak_variant = lb.weak_variant;
    block.clusters = lb.clusters;
    if (lb.dual) {
        inst.kind = InstanceKind::Dual;
        inst.family = lb.family;
        block.witness_points = lb.witness_points;
    } else {
        inst.kind = InstanceKind::Primal;
        inst.points = lb.points;
        block.witness_ranges = lb.witness_ranges;
    }
    inst.lowerbound = std::move(block);
    return inst;
}

LowerBoundInstance lowerbound_from_instance(const Instance& inst) {
    if (!inst.lowerbound) throw validation_error("instance carries no lowerbound block");
    if (!inst.range) throw validation_error("lower-bound instance needs a range");
    const auto& block = *inst.lowerbound;
    LowerBoundInstance lb{*inst.range,
                          inst.kind == InstanceKind::Dual,
                          block.k,
                          block.bound,
                          block.weak_variant,
                          block.clusters,
                          inst.points,
                          block.witness_ranges,
                          inst.family,
                          block.witness_points};
    return lb;
}

std::string write_coloring(const std::vector<std::string>& labels, const Coloring& coloring) {
    if (labels.size() != coloring.color.size())
        throw validation_error("coloring size does not match the label set");
    std::ostringstream os;
    for (std::size_t i = 0; i < labels.size(); ++i)
        os << labels[i] << " " << coloring.color[i] << "\n";
    return os.str();
}

Coloring parse_coloring(const std::string& text, const std::vector<std::string>& labels) {
    std::map<std::string, int> by_label;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string label;
        int color;
        if (!(ls >> label >> color)) throw validation_error("bad coloring line: " + line);
        if (color < 0) throw validation_error("colors must be nonnegative");
        if (!by_label.insert({label, color}).second)
            throw validation_error("label colored twice: " + label);
    }
    Coloring out;
    out.color.reserve(labels.size());
    for (const auto& l : labels) {
        auto it = by_label.find(l);
        if (it == by_label.end()) throw validation_error("coloring misses label: " + l);
        out.color.push_back(it->second);
        out.palette = std::max(out.palette, it->second + 1);
    }
    return out;
}

}  // namespace homcolor
