#include "clover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clover::io {

json word_to_json(const GroupWord& w) {
    json out = json::array();
    for (const Letter& l : w.letters())
        out.push_back(json::array({l.index, l.sign}));
    return out;
}

GroupWord word_from_json(const json& j, int rank) {
    if (!j.is_array())
        throw std::invalid_argument("word must be a list of [index, sign] pairs");
    std::vector<Letter> letters;
    letters.reserve(j.size());
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw std::invalid_argument("word letter must be an [index, sign] pair");
        letters.push_back(Letter{entry[0].get<int>(), entry[1].get<int>()});
    }
    return GroupWord(rank, std::move(letters));
}

json tangle_to_json(const TanglePresentation& t) {
    json out;
    out["n"] = t.component_count();
    json ls = json::array();
    for (const GroupWord& w : t.longitudes())
        ls.push_back(word_to_json(w));
    out["longitudes"] = std::move(ls);
    return out;
}

TanglePresentation tangle_from_json(const json& j, bool allow_nonzero_framing) {
    if (!j.is_object() || !j.contains("n") || !j.contains("longitudes"))
        throw std::invalid_argument("tangle document needs fields 'n' and 'longitudes'");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("field 'n' must be an integer");
    const int n = j["n"].get<int>();
    const json& ls = j["longitudes"];
    if (!ls.is_array())
        throw std::invalid_argument("field 'longitudes' must be a list of words");
    std::vector<GroupWord> words;
    words.reserve(ls.size());
    for (const json& w : ls)
        words.push_back(word_from_json(w, n));
    return TanglePresentation(n, std::move(words), allow_nonzero_framing);
}

TanglePresentation load_tangle(const std::string& path, bool allow_nonzero_framing) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open tangle file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed tangle file " + path + ": " + e.what());
    }
    return tangle_from_json(doc, allow_nonzero_framing);
}

std::string format_int(const Int& v) {
    return v.str();
}

json series_to_json(const MagnusSeries& s) {
    json out = json::array();
    s.for_each_term([&](const Monomial& m, const Int& c) {
        out.push_back(json::array({json(m), format_int(c)}));
    });
    return out;
}

json mu_table_to_json(const MuTable& table) {
    json out = json::array();
    for (const auto& [key, value] : table)
        out.push_back(json::array({json(key), format_int(value)}));
    return out;
}

json lattice_to_json(const AffineLattice& lattice) {
    json out;
    out["basis"] = json(lattice.basis);
    json base = json::array();
    for (const Int& v : lattice.base)
        base.push_back(format_int(v));
    out["base"] = std::move(base);
    json pairs = json::array();
    for (const auto& [p, q] : lattice.pairs)
        pairs.push_back(json::array({p, q}));
    out["pairs"] = std::move(pairs);
    json gens = json::array();
    for (int r = 0; r < lattice.gens.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < lattice.gens.cols(); ++c)
            row.push_back(format_int(lattice.gens.at(r, c)));
        gens.push_back(std::move(row));
    }
    out["gens"] = std::move(gens);
    return out;
}

SequenceKey parse_sequence(const std::string& text, int n) {
    if (text.empty())
        throw std::invalid_argument("empty sequence");
    SequenceKey out;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                out.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad sequence entry: '" + part + "'");
            }
        }
    } else {
        if (n > 9)
            throw std::invalid_argument(
                "digit-string sequences are only defined for n <= 9; use commas");
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("bad sequence digit: '" + std::string(1, ch) + "'");
            out.push_back(ch - '0');
        }
    }
    for (int idx : out)
        if (idx < 1 || idx > n)
            throw std::invalid_argument("sequence index out of range 1.." + std::to_string(n));
    return out;
}

std::string format_sequence(const SequenceKey& I, int n) {
    std::string out;
    for (std::size_t t = 0; t < I.size(); ++t) {
        if (n > 9 && t > 0)
            out += ',';
        out += std::to_string(I[t]);
    }
    return out;
}

std::string series_to_text(const MagnusSeries& s) {
    std::string out;
    s.for_each_term([&](const Monomial& m, const Int& c) {
        const bool negative = c < 0;
        Int mag = negative ? Int(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = mag == 1 && !m.empty();
        if (!unit)
            out += mag.str();
        if (!m.empty()) {
            if (!unit)
                out += " ";
            out += "X_" + format_sequence(m, s.rank());
        }
    });
    if (out.empty())
        out = "0";
    return out;
}

}  // namespace clover::io
