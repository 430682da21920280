#include "phg/hypergraph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phg {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* context) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known)
            throw FormatError(std::string("unknown key \"") + item.key() + "\" in " + context);
    }
}

Weight parse_weight(const json& w) {
    if (!w.is_object()) throw FormatError("weight must be an object");
    if (w.contains("re") || w.contains("im")) {
        require_keys(w, {"re", "im"}, "weight");
        if (!w.contains("re") || !w.contains("im") || !w["re"].is_number() || !w["im"].is_number())
            throw FormatError("weight needs numeric \"re\" and \"im\"");
        return {w["re"].get<double>(), w["im"].get<double>()};
    }
    if (w.contains("amp") || w.contains("phase")) {
        require_keys(w, {"amp", "phase"}, "weight");
        if (!w.contains("amp") || !w.contains("phase") || !w["amp"].is_number() ||
            !w["phase"].is_number())
            throw FormatError("weight needs numeric \"amp\" and \"phase\"");
        const double amp = w["amp"].get<double>();
        if (amp < 0.0) throw FormatError("weight amplitude must be >= 0");
        return polar_weight(amp, w["phase"].get<double>());
    }
    throw FormatError("weight must carry re/im or amp/phase");
}

}  // namespace

std::string write_hypergraph_text(const Hypergraph& h) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& id : h.vertex_ids()) doc["vertices"].push_back(id);
    doc["edges"] = json::array();
    for (const auto& e : h.edges()) {
        json edge;
        edge["on"] = json::array();
        for (const auto& inc : e.on) {
            edge["on"].push_back(json::array({h.vertex_ids()[inc.vertex], inc.mode}));
        }
        edge["w"] = {{"re", e.weight.real()}, {"im", e.weight.imag()}};
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

Hypergraph parse_hypergraph_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid hypergraph text: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("top level must be an object");
    require_keys(doc, {"vertices", "edges"}, "hypergraph");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw FormatError("missing \"vertices\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw FormatError("missing \"edges\" array");

    std::vector<std::string> vertex_ids;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw FormatError("vertex ids must be strings");
        vertex_ids.push_back(v.get<std::string>());
    }

    std::vector<EdgeSpec> specs;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object()) throw FormatError("edge entries must be objects");
        require_keys(e, {"on", "w"}, "edge");
        if (!e.contains("on") || !e["on"].is_array() || e["on"].empty())
            throw FormatError("edge needs a nonempty \"on\" array");
        if (!e.contains("w")) throw FormatError("edge needs a weight \"w\"");
        EdgeSpec spec;
        for (const auto& inc : e["on"]) {
            if (!inc.is_array() || inc.size() != 2 || !inc[0].is_string() ||
                !inc[1].is_number_integer())
                throw FormatError("incidence must be [\"vertex\", mode]");
            const int mode = inc[1].get<int>();
            if (mode < 0) throw FormatError("mode numbers must be >= 0");
            spec.on.emplace_back(inc[0].get<std::string>(), mode);
        }
        spec.weight = parse_weight(e["w"]);
        specs.push_back(std::move(spec));
    }

    try {
        return build_hypergraph(vertex_ids, specs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write file: " + path);
    out << content;
}

Hypergraph load_hypergraph(const std::string& path) {
    return parse_hypergraph_text(read_file(path));
}

}  // namespace phg
