#include "germforge/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "germforge/errors.hpp"
#include "germforge/invariant_rewrite.hpp"

namespace germforge {

namespace {

enum class Tok { plus, minus, star, caret, slash, lparen, rparen, integer, ident, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line, col = 1, ++i;
            continue;
        }
        if (std::isspace((unsigned char)c)) {
            ++col, ++i;
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit((unsigned char)c)) {
            std::string digits;
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
                digits += text[i++], ++col;
            out.push_back({Tok::integer, digits, tl, tc});
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
                name += text[i++], ++col;
            out.push_back({Tok::ident, name, tl, tc});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", tl, tc);
        }
        out.push_back({kind, std::string(1, c), tl, tc});
        ++col, ++i;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

long token_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (const std::exception&) {
        throw parse_error("integer '" + t.text + "' is out of range", t.line, t.col);
    }
}

struct PolyParser {
    const std::vector<Token>& toks;
    const std::vector<std::string>& vars;
    std::size_t at = 0;

    const Token& cur() const { return toks[at]; }
    bool eat(Tok k) {
        if (cur().kind != k) return false;
        ++at;
        return true;
    }

    Polynomial expr() {
        Polynomial p = term();
        while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
            bool minus = cur().kind == Tok::minus;
            ++at;
            p = minus ? p - term() : p + term();
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat(Tok::star)) p = p * factor();
        return p;
    }

    Polynomial factor() {
        if (eat(Tok::minus)) return factor() * CyclotomicNumber(-1);
        eat(Tok::plus);
        Polynomial base = atom();
        if (!eat(Tok::caret)) return base;
        const Token& e = cur();
        if (e.kind != Tok::integer)
            throw parse_error("exponent must be a positive integer", e.line, e.col);
        long k = token_long(e);
        ++at;
        if (k < 1) throw parse_error("exponent must be a positive integer", e.line, e.col);
        return base.pow(k);
    }

    Polynomial atom() {
        const Token& t = cur();
        if (eat(Tok::lparen)) {
            Polynomial p = expr();
            if (!eat(Tok::rparen))
                throw parse_error("expected ')'", cur().line, cur().col);
            return p;
        }
        if (t.kind == Tok::integer) {
            ++at;
            if (eat(Tok::slash)) {
                const Token& d = cur();
                if (d.kind != Tok::integer)
                    throw parse_error("expected a denominator", d.line, d.col);
                ++at;
                mpq_class r(t.text + "/" + d.text);
                r.canonicalize();
                return Polynomial::constant(vars, CyclotomicNumber(r));
            }
            return Polynomial::constant(vars, CyclotomicNumber(mpq_class(t.text)));
        }
        if (t.kind == Tok::ident) {
            ++at;
            if (std::find(vars.begin(), vars.end(), t.text) != vars.end())
                return Polynomial::variable(vars, t.text);
            if (t.text.size() > 1 && t.text[0] == 'z' &&
                std::all_of(t.text.begin() + 1, t.text.end(),
                            [](char c) { return std::isdigit((unsigned char)c); }))
                return Polynomial::constant(
                    vars, CyclotomicNumber::root_of_unity(token_long(
                              {Tok::integer, t.text.substr(1), t.line, t.col})));
            throw parse_error("unknown variable '" + t.text + "'", t.line, t.col);
        }
        throw parse_error("expected a value", t.line, t.col);
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// split on sep outside of any bracket or paren nesting
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

long parse_count(const std::string& text, const std::string& what) {
    std::string t = trim(text);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
            return std::isdigit((unsigned char)c);
        }))
        throw parse_error("expected an integer " + what + ", got '" + t + "'");
    try {
        return std::stol(t);
    } catch (const std::exception&) {
        throw parse_error(what + " '" + t + "' is out of range");
    }
}

CyclotomicNumber parse_scalar(const std::string& text) {
    Polynomial p = parse_polynomial(text, {});
    return p.constant_term();
}

CycloMatrix parse_matrix_literal(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw parse_error("a matrix literal looks like [[a, b], [c, d]], got '" + t + "'");
    CycloMatrix m;
    std::size_t width = 0;
    for (const std::string& row_text : split_top_level(t.substr(1, t.size() - 2), ',')) {
        if (row_text.size() < 2 || row_text.front() != '[' || row_text.back() != ']')
            throw parse_error("a matrix row looks like [a, b], got '" + row_text + "'");
        std::vector<CyclotomicNumber> row;
        for (const std::string& entry :
             split_top_level(row_text.substr(1, row_text.size() - 2), ','))
            row.push_back(parse_scalar(entry));
        if (m.empty()) width = row.size();
        else if (row.size() != width)
            throw parse_error("matrix rows have unequal lengths");
        m.push_back(std::move(row));
    }
    return m;
}

// key = value lines, # starts a comment, keys may repeat
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream stream(text);
    std::string line;
    int number = 0;
    while (std::getline(stream, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key = value", number, 1);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw parse_error("expected key = value", number, 1);
        out.emplace_back(std::move(key), std::move(value));
    }
    return out;
}

ReflectionGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read group file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();

    long dimension = 0, conductor = 0;
    std::vector<CycloMatrix> generators;
    std::vector<std::string> orbit_texts, variables, basis_texts;
    std::vector<long> degrees;
    std::string name;
    for (const auto& [key, value] : parse_key_values(buffer.str())) {
        if (key == "dimension") dimension = parse_count(value, "dimension");
        else if (key == "conductor") conductor = parse_count(value, "conductor");
        else if (key == "generator") generators.push_back(parse_matrix_literal(value));
        else if (key == "orbit_map") orbit_texts = split_top_level(value, ',');
        else if (key == "variables") variables = split_top_level(value, ',');
        else if (key == "degrees")
            for (const std::string& d : split_top_level(value, ','))
                degrees.push_back(parse_count(d, "degree"));
        else if (key == "basis") basis_texts = split_top_level(value, ',');
        else if (key == "name") name = value;
        else throw parse_error("unknown group file key '" + key + "'");
    }
    if (dimension < 1) throw parse_error("group file must declare a positive dimension");
    if (conductor < 1) throw parse_error("group file must declare a positive conductor");
    if (generators.empty()) throw parse_error("group file declares no generator");
    if (orbit_texts.empty()) throw parse_error("group file declares no orbit_map");
    if (degrees.empty()) throw parse_error("group file declares no degrees");

    for (const CycloMatrix& g : generators)
        for (const auto& row : g)
            for (const CyclotomicNumber& entry : row)
                if (conductor % entry.conductor() != 0)
                    throw parse_error("generator entry " + entry.to_string() +
                                      " lies outside the declared conductor " +
                                      std::to_string(conductor));

    if (variables.empty()) {
        if (dimension == 2) variables = {"x", "y"};
        else
            for (long i = 1; i <= dimension; ++i)
                variables.push_back("x" + std::to_string(i));
    }
    std::vector<Polynomial> orbit_map, basis;
    for (const std::string& w : orbit_texts) orbit_map.push_back(parse_polynomial(w, variables));
    for (const std::string& b : basis_texts) basis.push_back(parse_polynomial(b, variables));
    if (name.empty()) name = "file:" + path;
    return ReflectionGroup::generate_closure(generators, std::move(orbit_map),
                                             std::move(degrees), std::move(variables),
                                             std::move(basis), std::move(name));
}

} // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
    auto toks = lex(text);
    PolyParser parser{toks, variables};
    Polynomial p = parser.expr();
    const Token& rest = parser.cur();
    if (rest.kind != Tok::end)
        throw parse_error("unexpected trailing input", rest.line, rest.col);
    return p;
}

ReflectionGroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw parse_error("a group spec looks like product:2x2, cyclic:4, dihedral:6, "
                          "or file:path, got '" + spec + "'");
    std::string family = trim(spec.substr(0, colon));
    std::string argument = trim(spec.substr(colon + 1));
    if (family == "product") {
        auto cross = argument.find('x');
        if (cross == std::string::npos)
            throw parse_error("the product family takes orders like 2x2, got '" +
                              argument + "'");
        return ReflectionGroup::product(
            (int)parse_count(argument.substr(0, cross), "order"),
            (int)parse_count(argument.substr(cross + 1), "order"));
    }
    if (family == "cyclic")
        return ReflectionGroup::cyclic((int)parse_count(argument, "order"));
    if (family == "dihedral")
        return ReflectionGroup::dihedral((int)parse_count(argument, "order"));
    if (family == "file") return load_group_file(argument);
    throw parse_error("unknown group family '" + family + "'");
}

GermDocument parse_germ_document(const std::string& text) {
    GermDocument doc;
    for (const auto& [key, value] : parse_key_values(text)) {
        if (key == "group") {
            if (!doc.group_spec.empty()) throw parse_error("duplicate key 'group'");
            doc.group_spec = value;
        } else if (key == "h") {
            if (!doc.h_source.empty()) throw parse_error("duplicate key 'h'");
            doc.h_source = value;
        } else if (key == "params") {
            for (const std::string& entry : split_top_level(value, ',')) {
                auto eq = entry.find('=');
                ParameterSpec p;
                p.name = trim(eq == std::string::npos ? entry : entry.substr(0, eq));
                if (eq != std::string::npos) p.target_expression = trim(entry.substr(eq + 1));
                if (p.name.empty()) throw parse_error("empty parameter name");
                doc.parameters.push_back(std::move(p));
            }
        } else {
            throw parse_error("unknown germ document key '" + key + "'");
        }
    }
    return doc;
}

GermDocument load_germ_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read germ document '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_germ_document(buffer.str());
}

ReflectedGraphGerm assemble_germ(const GermDocument& doc) {
    if (doc.group_spec.empty()) throw parse_error("the germ declares no group");
    if (doc.h_source.empty()) throw parse_error("the germ declares no h");
    ReflectionGroup group = parse_group_spec(doc.group_spec);

    const auto& source = group.source_variables();
    std::vector<std::string> targets = target_variables(group);
    std::vector<std::string> names;
    for (const ParameterSpec& p : doc.parameters) {
        bool reserved = p.name == "Z" || p.name[0] == 'x' || p.name[0] == 'X' ||
                        std::find(source.begin(), source.end(), p.name) != source.end() ||
                        std::find(targets.begin(), targets.end(), p.name) != targets.end();
        if (reserved)
            throw parse_error("parameter name '" + p.name +
                              "' collides with a reserved variable");
        if (std::find(names.begin(), names.end(), p.name) != names.end())
            throw parse_error("duplicate parameter '" + p.name + "'");
        names.push_back(p.name);
    }

    std::vector<std::string> hvars = source;
    hvars.insert(hvars.end(), names.begin(), names.end());
    Polynomial h = parse_polynomial(doc.h_source, hvars);

    std::map<std::string, Polynomial> pullback;
    for (std::size_t i = 0; i < targets.size(); ++i)
        pullback[targets[i]] = group.orbit_map()[i];
    std::map<std::string, Polynomial> assignments;
    std::vector<std::string> symbolic;
    for (const ParameterSpec& p : doc.parameters) {
        if (p.target_expression.empty()) {
            symbolic.push_back(p.name);
            continue;
        }
        assignments[p.name] =
            parse_polynomial(p.target_expression, targets).substitute(pullback);
    }
    if (!assignments.empty()) {
        std::vector<std::string> keep = source;
        keep.insert(keep.end(), symbolic.begin(), symbolic.end());
        h = h.substitute(assignments).with_variables(keep);
    }
    return ReflectedGraphGerm::create(std::move(group), std::move(h), {},
                                      std::move(symbolic));
}

} // namespace germforge
