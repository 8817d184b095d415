// Copyright 2026 The gheights Authors
// SPDX-License-Identifier: Apache-2.0
#include "gheights/session.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "gheights/errors.hpp"
#include "gheights/parser.hpp"

namespace gh {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::size_t parse_count(const std::string& value, const std::string& context) {
    if (value.empty()) throw SessionError(context + ": expected a non-negative integer");
    for (char c : value)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SessionError(context + ": expected a non-negative integer, got '" + value + "'");
    return static_cast<std::size_t>(std::stoull(value));
}

// One raw key/value line of a section.
struct KeyLine {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct RawSection {
    std::string type; // "ring", "poly", ...
    std::string name; // empty for [ring]
    std::size_t line = 0;
    std::vector<KeyLine> keys;

    std::string context() const {
        std::string head = "[" + type + (name.empty() ? "" : " " + name) + "]";
        return head + " (line " + std::to_string(line) + ")";
    }
};

class SessionBuilder {
public:
    SessionDocument build(const std::string& text) {
        scan(text);
        if (sections_.empty()) throw SessionError("session defines no [ring] section");
        if (sections_.front().type != "ring")
            throw SessionError("the first session section must be [ring], got " +
                               sections_.front().context());
        for (const auto& sec : sections_) process(sec);
        return std::move(doc_);
    }

private:
    void scan(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::string t = trim(line);
            if (t.empty() || t.front() == '#') continue;
            if (t.front() == '[') {
                if (t.back() != ']')
                    throw SessionError("line " + std::to_string(lineno) +
                                       ": unterminated section header '" + t + "'");
                std::vector<std::string> parts;
                {
                    std::istringstream hs(t.substr(1, t.size() - 2));
                    std::string w;
                    while (hs >> w) parts.push_back(w);
                }
                if (parts.empty())
                    throw SessionError("line " + std::to_string(lineno) + ": empty section header");
                RawSection sec;
                sec.type = parts[0];
                sec.line = lineno;
                if (sec.type == "ring") {
                    if (parts.size() != 1)
                        throw SessionError("line " + std::to_string(lineno) +
                                           ": [ring] takes no name");
                } else {
                    if (parts.size() != 2)
                        throw SessionError("line " + std::to_string(lineno) + ": section [" +
                                           sec.type + "] needs exactly one name");
                    sec.name = parts[1];
                    if (!PolyRing::valid_identifier(sec.name))
                        throw SessionError("line " + std::to_string(lineno) +
                                           ": invalid object name '" + sec.name + "'");
                }
                sections_.push_back(std::move(sec));
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw SessionError("line " + std::to_string(lineno) +
                                   ": expected 'key = value', got '" + t + "'");
            if (sections_.empty())
                throw SessionError("line " + std::to_string(lineno) +
                                   ": key line before the first section");
            KeyLine kl;
            kl.key = trim(line.substr(0, eq));
            kl.value = trim(line.substr(eq + 1));
            kl.line = lineno;
            if (kl.key.empty())
                throw SessionError("line " + std::to_string(lineno) + ": empty key");
            sections_.back().keys.push_back(std::move(kl));
        }
    }

    void process(const RawSection& sec) {
        if (sec.type == "ring") {
            process_ring(sec);
            return;
        }
        if (!doc_.ring) throw SessionError(sec.context() + ": appears before [ring]");
        claim_name(sec);
        if (sec.type == "poly")
            process_poly(sec);
        else if (sec.type == "matrix")
            process_matrix(sec);
        else if (sec.type == "vector")
            process_vector(sec);
        else if (sec.type == "ideal")
            process_ideal(sec);
        else if (sec.type == "prime")
            process_prime(sec);
        else if (sec.type == "certificate")
            process_certificate(sec);
        else
            throw SessionError(sec.context() + ": unknown section type");
    }

    void claim_name(const RawSection& sec) {
        if (!names_.insert(sec.name).second)
            throw SessionError(sec.context() + ": duplicate object name '" + sec.name + "'");
    }

    [[noreturn]] void unknown_key(const RawSection& sec, const KeyLine& kl) {
        throw SessionError(sec.context() + ": unknown key '" + kl.key + "' (line " +
                           std::to_string(kl.line) + ")");
    }

    Polynomial parse_expr(const RawSection& sec, const KeyLine& kl, const std::string& text) {
        try {
            return parse_polynomial(doc_.ring, text);
        } catch (const Error& e) {
            throw SessionError(sec.context() + " line " + std::to_string(kl.line) + ": " +
                               e.what());
        }
    }

    std::vector<Polynomial> parse_list(const RawSection& sec, const KeyLine& kl) {
        std::vector<Polynomial> out;
        for (const std::string& piece : split(kl.value, ';')) out.push_back(parse_expr(sec, kl, piece));
        return out;
    }

    void process_ring(const RawSection& sec) {
        if (doc_.ring) throw SessionError(sec.context() + ": duplicate [ring] section");
        std::optional<std::string> vars, field, order;
        for (const auto& kl : sec.keys) {
            std::optional<std::string>* slot = nullptr;
            if (kl.key == "vars")
                slot = &vars;
            else if (kl.key == "field")
                slot = &field;
            else if (kl.key == "order")
                slot = &order;
            else
                unknown_key(sec, kl);
            if (*slot)
                throw SessionError(sec.context() + ": duplicate key '" + kl.key + "' (line " +
                                   std::to_string(kl.line) + ")");
            *slot = kl.value;
        }
        if (!vars) throw SessionError(sec.context() + ": missing required key 'vars'");
        std::vector<std::string> names = split(*vars, ',');
        CoefficientField f = CoefficientField::rationals();
        if (field && *field != "Q") {
            std::istringstream fs(*field);
            std::string kind;
            long long p = 0;
            if (!(fs >> kind >> p) || kind != "Fp" || (fs >> std::ws, !fs.eof()))
                throw SessionError(sec.context() + ": field must be 'Q' or 'Fp <p>', got '" +
                                   *field + "'");
            try {
                f = CoefficientField::prime_field(p);
            } catch (const Error& e) {
                throw SessionError(sec.context() + ": " + e.what());
            }
        }
        MonomialOrder ord = MonomialOrder::grevlex();
        if (order) {
            if (*order == "grevlex")
                ord = MonomialOrder::grevlex();
            else if (*order == "lex")
                ord = MonomialOrder::lex();
            else
                throw SessionError(sec.context() + ": order must be 'grevlex' or 'lex', got '" +
                                   *order + "'");
        }
        try {
            doc_.ring = PolyRing::create(std::move(names), f, ord);
        } catch (const Error& e) {
            throw SessionError(sec.context() + ": " + e.what());
        }
    }

    void process_poly(const RawSection& sec) {
        std::optional<Polynomial> value;
        for (const auto& kl : sec.keys) {
            if (kl.key != "expr") unknown_key(sec, kl);
            if (value)
                throw SessionError(sec.context() + ": duplicate key 'expr' (line " +
                                   std::to_string(kl.line) + ")");
            value = parse_expr(sec, kl, kl.value);
        }
        if (!value) throw SessionError(sec.context() + ": missing required key 'expr'");
        doc_.polys.emplace(sec.name, std::move(*value));
    }

    void process_matrix(const RawSection& sec) {
        std::vector<std::vector<Polynomial>> rows;
        std::optional<std::size_t> declared_rows, declared_cols;
        for (const auto& kl : sec.keys) {
            if (kl.key == "row") {
                rows.push_back(parse_list(sec, kl));
            } else if (kl.key == "rows" || kl.key == "cols") {
                auto& slot = kl.key == "rows" ? declared_rows : declared_cols;
                if (slot)
                    throw SessionError(sec.context() + ": duplicate key '" + kl.key + "' (line " +
                                       std::to_string(kl.line) + ")");
                slot = parse_count(kl.value, sec.context() + " key '" + kl.key + "'");
            } else {
                unknown_key(sec, kl);
            }
        }
        std::size_t nrows = declared_rows.value_or(rows.size());
        std::size_t ncols;
        if (declared_cols)
            ncols = *declared_cols;
        else if (!rows.empty())
            ncols = rows.front().size();
        else
            throw SessionError(sec.context() +
                               ": a matrix with no 'row' lines needs explicit rows/cols");
        if (nrows == 0 || ncols == 0) {
            if (!rows.empty())
                throw SessionError(sec.context() + ": 'row' lines given for a " +
                                   std::to_string(nrows) + "x" + std::to_string(ncols) +
                                   " shape");
        } else {
            if (rows.size() != nrows)
                throw SessionError(sec.context() + ": got " + std::to_string(rows.size()) +
                                   " 'row' lines for " + std::to_string(nrows) + " rows");
            for (const auto& r : rows)
                if (r.size() != ncols)
                    throw SessionError(sec.context() + ": row has " + std::to_string(r.size()) +
                                       " entries, expected " + std::to_string(ncols));
        }
        std::vector<Polynomial> entries;
        entries.reserve(nrows * ncols);
        for (auto& r : rows)
            for (auto& p : r) entries.push_back(std::move(p));
        doc_.matrices.emplace(sec.name, PolyMatrix(doc_.ring, nrows, ncols, std::move(entries)));
    }

    void process_vector(const RawSection& sec) {
        std::optional<std::vector<Polynomial>> comps;
        for (const auto& kl : sec.keys) {
            if (kl.key != "entries") unknown_key(sec, kl);
            if (comps)
                throw SessionError(sec.context() + ": duplicate key 'entries' (line " +
                                   std::to_string(kl.line) + ")");
            comps = parse_list(sec, kl);
        }
        if (!comps) throw SessionError(sec.context() + ": missing required key 'entries'");
        doc_.vectors.emplace(sec.name, FreeModuleElement(doc_.ring, std::move(*comps)));
    }

    std::vector<Polynomial> collect_gens(const RawSection& sec,
                                         const std::vector<std::string>& extra_keys,
                                         std::map<std::string, KeyLine>& extras) {
        std::vector<Polynomial> gens;
        for (const auto& kl : sec.keys) {
            if (kl.key == "gen") {
                gens.push_back(parse_expr(sec, kl, kl.value));
                continue;
            }
            bool known = false;
            for (const auto& k : extra_keys) known = known || k == kl.key;
            if (!known) unknown_key(sec, kl);
            if (!extras.emplace(kl.key, kl).second)
                throw SessionError(sec.context() + ": duplicate key '" + kl.key + "' (line " +
                                   std::to_string(kl.line) + ")");
        }
        return gens;
    }

    void process_ideal(const RawSection& sec) {
        std::map<std::string, KeyLine> extras;
        std::vector<Polynomial> gens = collect_gens(sec, {}, extras);
        doc_.ideals.emplace(sec.name, Ideal(doc_.ring, std::move(gens)));
    }

    void process_prime(const RawSection& sec) {
        std::map<std::string, KeyLine> extras;
        std::vector<Polynomial> gens = collect_gens(sec, {"asserted", "label"}, extras);
        bool asserted = false;
        if (auto it = extras.find("asserted"); it != extras.end()) {
            if (it->second.value == "true")
                asserted = true;
            else if (it->second.value == "false")
                asserted = false;
            else
                throw SessionError(sec.context() + ": asserted must be true or false, got '" +
                                   it->second.value + "'");
        }
        std::string label = sec.name;
        if (auto it = extras.find("label"); it != extras.end()) label = it->second.value;
        try {
            doc_.primes.emplace(sec.name,
                                PrimeWitness(Ideal(doc_.ring, std::move(gens)), asserted, label));
        } catch (const Error& e) {
            throw SessionError(sec.context() + ": " + e.what());
        }
    }

    void process_certificate(const RawSection& sec) {
        std::optional<std::string> kind, note;
        for (const auto& kl : sec.keys) {
            std::optional<std::string>* slot = nullptr;
            if (kl.key == "kind")
                slot = &kind;
            else if (kl.key == "note")
                slot = &note;
            else
                unknown_key(sec, kl);
            if (*slot)
                throw SessionError(sec.context() + ": duplicate key '" + kl.key + "' (line " +
                                   std::to_string(kl.line) + ")");
            *slot = kl.value;
        }
        if (!kind) throw SessionError(sec.context() + ": missing required key 'kind'");
        // Verified kinds are earned by computation, never declared.
        if (*kind != "user_asserted")
            throw SessionError(sec.context() +
                               ": a session certificate must have kind user_asserted, got '" +
                               *kind + "'");
        EquidimCertificate cert;
        cert.kind = EquidimCertificate::Kind::user_asserted;
        cert.detail = note.value_or("user-asserted equidimensionality");
        doc_.certificates.emplace(sec.name, std::move(cert));
    }

    SessionDocument doc_;
    std::vector<RawSection> sections_;
    std::set<std::string> names_;
};

template <typename Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name,
                                        const char* what) {
    auto it = map.find(name);
    if (it == map.end())
        throw SessionError(std::string("session defines no ") + what + " named '" + name + "'");
    return it->second;
}

} // namespace

const Polynomial& SessionDocument::poly(const std::string& name) const {
    return lookup(polys, name, "polynomial");
}
const PolyMatrix& SessionDocument::matrix(const std::string& name) const {
    return lookup(matrices, name, "matrix");
}
const FreeModuleElement& SessionDocument::vector(const std::string& name) const {
    return lookup(vectors, name, "vector");
}
const Ideal& SessionDocument::ideal(const std::string& name) const {
    return lookup(ideals, name, "ideal");
}
const PrimeWitness& SessionDocument::prime(const std::string& name) const {
    return lookup(primes, name, "prime witness");
}
const EquidimCertificate& SessionDocument::certificate(const std::string& name) const {
    return lookup(certificates, name, "certificate");
}

SessionDocument parse_session_text(const std::string& text) {
    return SessionBuilder().build(text);
}

SessionDocument parse_session_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SessionError("cannot open session file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_session_text(buf.str());
    } catch (const SessionError& e) {
        throw SessionError(path + ": " + e.what());
    }
}

} // namespace gh
