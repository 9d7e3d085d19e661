#include "hpd/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hpd {

namespace {

using nlohmann::json;

struct Line {
    int number = 0;     // 1-based
    std::string text;   // comment-stripped, untrimmed (columns stay honest)
};

std::vector<Line> data_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back({number, raw});
    }
    return out;
}

bool is_face_line(const std::string& s) {
    // A comma can only mean a face list; let the face parser report malformed
    // entries instead of silently treating "x," as a variable name.
    if (s.find(',') != std::string::npos) return true;
    bool digits = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digits = true;
        else if (c != ' ' && c != '\t')
            return false;
    }
    if (!digits) return false;
    // Without a comma it must be one integer token, else it reads as an
    // ideal whose variables happen to be numerals.
    std::istringstream in(s);
    std::string tok;
    int count = 0;
    while (in >> tok) ++count;
    return count == 1;
}

int to_vertex(const std::string& tok, int line, int column, bool zero_based,
              std::vector<long>* raw) {
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a vertex number, got '" + tok + "'",
                             line, column);
    long v = 0;
    for (char c : tok) {
        v = v * 10 + (c - '0');
        if (v > 1'000'000)
            throw ParseError("vertex number out of range: " + tok, line, column);
    }
    if (!zero_based && v == 0)
        throw ParseError("vertex 0 in 1-based input (did you mean --zero-based?)",
                         line, column);
    raw->push_back(v);
    return static_cast<int>(zero_based ? v : v - 1);
}

void check_caps_and_coverage(int mu, const std::vector<Face>& faces,
                             bool zero_based) {
    if (mu > kMaxVertices)
        throw ParseError("instance has " + std::to_string(mu) + " vertices; " +
                         std::to_string(kMaxVertices) + " is the maximum");
    Face seen = 0;
    for (Face f : faces) seen |= f;
    for (int v = 0; v < mu; ++v)
        if (!has_bit(seen, v))
            throw ParseError("vertex " + std::to_string(zero_based ? v : v + 1) +
                             " appears in no face");
}

std::vector<std::string> numbering_labels(int mu, bool zero_based) {
    std::vector<std::string> labels;
    labels.reserve(mu);
    for (int v = 0; v < mu; ++v)
        labels.push_back(std::to_string(zero_based ? v : v + 1));
    return labels;
}

Hypergraph parse_hypergraph_text(const std::vector<Line>& lines,
                                 bool zero_based) {
    std::vector<Face> faces;
    int mu = 0;
    for (const Line& ln : lines) {
        Face face = 0;
        std::vector<long> raw;
        std::size_t pos = 0;
        bool any = false;
        while (pos <= ln.text.size()) {
            std::size_t comma = ln.text.find(',', pos);
            std::size_t end = comma == std::string::npos ? ln.text.size() : comma;
            std::size_t a = pos, b = end;
            while (a < b && std::isspace(static_cast<unsigned char>(ln.text[a])))
                ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(ln.text[b - 1])))
                --b;
            if (a == b)
                throw ParseError("empty vertex entry", ln.number,
                                 static_cast<int>(pos) + 1);
            int v = to_vertex(ln.text.substr(a, b - a), ln.number,
                              static_cast<int>(a) + 1, zero_based, &raw);
            if (v >= kMaxVertices)
                throw ParseError("vertex number exceeds the " +
                                 std::to_string(kMaxVertices) + "-vertex cap",
                                 ln.number, static_cast<int>(a) + 1);
            face |= bit(v);
            mu = std::max(mu, v + 1);
            any = true;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!any) throw ParseError("empty face", ln.number, 1);
        faces.push_back(face);
    }
    if (faces.empty()) throw ParseError("no faces in input");
    check_caps_and_coverage(mu, faces, zero_based);
    return make_hypergraph(mu, std::move(faces),
                           numbering_labels(mu, zero_based));
}

std::string monomial_name(const std::vector<std::string>& vars) {
    bool all_single = std::all_of(vars.begin(), vars.end(),
                                  [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i && !all_single) out += "*";
        out += vars[i];
    }
    return out;
}

MonomialIdeal parse_ideal_text(const std::vector<Line>& lines) {
    MonomialIdeal ideal;
    std::map<std::string, int> var_index;
    for (const Line& ln : lines) {
        std::istringstream in(ln.text);
        std::string tok;
        Face supp = 0;
        std::vector<std::string> names;
        while (in >> tok) {
            if (tok.find(',') != std::string::npos)
                throw ParseError("commas are face syntax; variable names may "
                                 "not contain ','",
                                 ln.number, 1);
            auto [it, fresh] = var_index.try_emplace(
                tok, static_cast<int>(var_index.size()));
            if (fresh) {
                if (static_cast<int>(var_index.size()) > kMaxVertices)
                    throw ParseError("more than " +
                                     std::to_string(kMaxVertices) +
                                     " distinct variables",
                                     ln.number, 1);
                ideal.var_names.push_back(tok);
            }
            supp |= bit(it->second);
            names.push_back(tok);
        }
        if (supp == 0) throw ParseError("empty generator", ln.number, 1);
        ideal.gens.push_back(supp);
        ideal.gen_names.push_back(monomial_name(names));
    }
    if (ideal.gens.empty()) throw ParseError("no generators in input");
    ideal.num_vars = static_cast<int>(var_index.size());
    return ideal;
}

std::pair<int, int> location_of_byte(const std::string& text, std::size_t byte) {
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Instance parse_json(const std::string& text, bool zero_based) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = location_of_byte(text, e.byte ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, column);
    }
    if (!doc.is_object())
        throw ParseError("top-level json value must be an object");

    if (doc.contains("mu") || doc.contains("faces")) {
        if (!doc.contains("mu") || !doc["mu"].is_number_integer())
            throw ParseError("json hypergraph needs an integer \"mu\"");
        if (!doc.contains("faces") || !doc["faces"].is_array())
            throw ParseError("json hypergraph needs a \"faces\" array");
        const int mu = doc["mu"].get<int>();
        if (mu <= 0) throw ParseError("\"mu\" must be positive");
        std::vector<Face> faces;
        for (std::size_t fi = 0; fi < doc["faces"].size(); ++fi) {
            const json& jf = doc["faces"][fi];
            if (!jf.is_array() || jf.empty())
                throw ParseError("face #" + std::to_string(fi + 1) +
                                 " must be a nonempty array");
            Face face = 0;
            for (const json& jv : jf) {
                if (!jv.is_number_integer())
                    throw ParseError("face #" + std::to_string(fi + 1) +
                                     " has a non-integer vertex");
                long v = jv.get<long>();
                long lo = zero_based ? 0 : 1;
                long hi = zero_based ? mu - 1 : mu;
                if (v < lo || v > hi)
                    throw ParseError("face #" + std::to_string(fi + 1) +
                                     ": vertex " + std::to_string(v) +
                                     " outside " + std::to_string(lo) + ".." +
                                     std::to_string(hi));
                face |= bit(static_cast<int>(zero_based ? v : v - 1));
            }
            faces.push_back(face);
        }
        if (faces.empty()) throw ParseError("no faces in input");
        check_caps_and_coverage(mu, faces, zero_based);
        return make_hypergraph(mu, std::move(faces),
                               numbering_labels(mu, zero_based));
    }

    if (doc.contains("vars") || doc.contains("gens")) {
        if (!doc.contains("vars") || !doc["vars"].is_array())
            throw ParseError("json ideal needs a \"vars\" array");
        if (!doc.contains("gens") || !doc["gens"].is_array())
            throw ParseError("json ideal needs a \"gens\" array");
        MonomialIdeal ideal;
        std::map<std::string, int> var_index;
        for (const json& jv : doc["vars"]) {
            if (!jv.is_string())
                throw ParseError("\"vars\" entries must be strings");
            std::string name = jv.get<std::string>();
            if (!var_index.try_emplace(name, static_cast<int>(var_index.size()))
                     .second)
                throw ParseError("duplicate variable \"" + name + "\"");
            ideal.var_names.push_back(std::move(name));
        }
        ideal.num_vars = static_cast<int>(var_index.size());
        if (ideal.num_vars == 0) throw ParseError("empty \"vars\" array");
        if (ideal.num_vars > kMaxVertices)
            throw ParseError("more than " + std::to_string(kMaxVertices) +
                             " variables");
        for (std::size_t gi = 0; gi < doc["gens"].size(); ++gi) {
            const json& jg = doc["gens"][gi];
            if (!jg.is_array() || jg.empty())
                throw ParseError("generator #" + std::to_string(gi + 1) +
                                 " must be a nonempty array");
            Face supp = 0;
            std::vector<std::string> names;
            for (const json& jv : jg) {
                if (!jv.is_string())
                    throw ParseError("generator #" + std::to_string(gi + 1) +
                                     " has a non-string variable");
                std::string name = jv.get<std::string>();
                auto it = var_index.find(name);
                if (it == var_index.end())
                    throw ParseError("generator #" + std::to_string(gi + 1) +
                                     " uses undeclared variable \"" + name +
                                     "\"");
                supp |= bit(it->second);
                names.push_back(std::move(name));
            }
            ideal.gens.push_back(supp);
            ideal.gen_names.push_back(monomial_name(names));
        }
        if (ideal.gens.empty()) throw ParseError("no generators in input");
        return ideal;
    }

    throw ParseError(
        "json object must carry mu+faces (hypergraph) or vars+gens (ideal)");
}

}  // namespace

Instance parse_instance(const std::string& text, bool zero_based) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input");
    if (text[first] == '{') return parse_json(text, zero_based);
    auto lines = data_lines(text);
    if (lines.empty()) throw ParseError("no data lines in input");
    if (is_face_line(lines.front().text))
        return parse_hypergraph_text(lines, zero_based);
    return parse_ideal_text(lines);
}

Instance parse_file(const std::string& path, bool zero_based) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), zero_based);
}

Hypergraph instance_hypergraph(const Instance& inst) {
    if (const auto* h = std::get_if<Hypergraph>(&inst)) return *h;
    return from_ideal(std::get<MonomialIdeal>(inst));
}

MonomialIdeal instance_ideal(const Instance& inst) {
    if (const auto* i = std::get_if<MonomialIdeal>(&inst)) return *i;
    return to_standard_ideal(std::get<Hypergraph>(inst));
}

std::string to_text(const Hypergraph& h) {
    std::string out;
    for (Face f : h.faces) {
        bool first = true;
        for (int v : face_vertices(f)) {
            if (!first) out += ",";
            out += std::to_string(v + 1);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string to_text(const MonomialIdeal& ideal) {
    std::string out;
    for (Face g : ideal.gens) {
        bool first = true;
        for (int i : face_vertices(g)) {
            if (!first) out += " ";
            out += ideal.var_name(i);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Hypergraph& h) {
    json faces = json::array();
    for (Face f : h.faces) {
        json jf = json::array();
        for (int v : face_vertices(f)) jf.push_back(v + 1);
        faces.push_back(std::move(jf));
    }
    return json{{"mu", h.mu}, {"faces", std::move(faces)}}.dump() + "\n";
}

std::string to_json(const MonomialIdeal& ideal) {
    json vars = json::array();
    for (int i = 0; i < ideal.num_vars; ++i) vars.push_back(ideal.var_name(i));
    json gens = json::array();
    for (Face g : ideal.gens) {
        json jg = json::array();
        for (int i : face_vertices(g)) jg.push_back(ideal.var_name(i));
        gens.push_back(std::move(jg));
    }
    return json{{"vars", std::move(vars)}, {"gens", std::move(gens)}}.dump() +
           "\n";
}

}  // namespace hpd
