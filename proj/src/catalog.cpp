#include "sgp/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgp {

Catalog Catalog::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open catalog " + path);
    Catalog cat;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        CatalogRow row;
        std::string k2;
        if (!(ss >> row.v >> row.k1 >> k2 >> row.m1 >> row.m2 >> row.max >> row.method >> row.r))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
        row.k2 = k2 == "-" ? 0 : std::stoi(k2);
        parse_method(row.method);  // validate eagerly
        cat.rows_.push_back(row);
    }
    return cat;
}

std::vector<CatalogRow> Catalog::lookup(int v) const {
    std::vector<CatalogRow> out;
    for (const auto& r : rows_)
        if (r.v == v) out.push_back(r);
    return out;
}

std::vector<CatalogRow> Catalog::lookup(int v, int k1, int k2) const {
    std::vector<CatalogRow> out;
    for (const auto& r : rows_)
        if (r.v == v && r.k1 == k1 && r.k2 == k2) out.push_back(r);
    return out;
}

std::optional<CatalogRow> Catalog::find(int v, int k1, int k2, int m1, int m2) const {
    for (const auto& r : rows_)
        if (r.v == v && r.k1 == k1 && r.k2 == k2 && r.m1 == m1 && r.m2 == m2) return r;
    return std::nullopt;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool eat(const std::string& word) {
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    int number() {
        size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("method parse: number expected in " + s);
        return std::stoi(s.substr(start, pos - start));
    }
    // (a,b,...) or ({a,b,...}) or (a,b;c)
    std::vector<int> arglist() {
        std::vector<int> out;
        if (!eat("(")) throw std::invalid_argument("method parse: '(' expected in " + s);
        bool braced = eat("{");
        out.push_back(number());
        while (eat(",") || eat(";")) out.push_back(number());
        if (braced && !eat("}")) throw std::invalid_argument("method parse: '}' expected in " + s);
        if (!eat(")")) throw std::invalid_argument("method parse: ')' expected in " + s);
        return out;
    }
};

}  // namespace

MethodExpr parse_method(const std::string& s) {
    MethodExpr m;
    Cursor c{s};
    if (c.eat("KTS"))
        m.base = MethodExpr::Base::KTS;
    else if (c.eat("NKTS"))
        m.base = MethodExpr::Base::NKTS;
    else if (c.eat("RBIBD"))
        m.base = MethodExpr::Base::RBIBD;
    else if (c.eat("RTD"))
        m.base = MethodExpr::Base::RTD;
    else if (c.eat("RGDD"))
        m.base = MethodExpr::Base::RGDD;
    else if (c.eat("URD"))
        m.base = MethodExpr::Base::URD;
    else if (c.eat("RITD"))
        m.base = MethodExpr::Base::RITD;
    else if (c.eat("MOLRs"))
        m.base = MethodExpr::Base::MOLRS;
    else if (c.eat("ownSG"))
        m.base = MethodExpr::Base::OWNSG;
    else if (c.eat("single-round")) {
        m.base = MethodExpr::Base::SINGLE;
        return m;
    } else
        throw std::invalid_argument("method parse: unknown base in " + s);
    m.args = c.arglist();
    if (m.base == MethodExpr::Base::NKTS) m.args.resize(1);  // tolerate NKTS(v,k)

    if (c.eat("_D")) {
        if (!c.eat("+")) throw std::invalid_argument("method parse: '+' expected in " + s);
        m.mod = MethodExpr::Mod::DmPlusT;
        m.t = c.number();
    } else if (c.eat("_Q")) {
        auto qa = c.arglist();
        if (qa.size() != 2) throw std::invalid_argument("method parse: _Q wants two args in " + s);
        m.q_g = qa[0];
        m.q_u = qa[1];
        if (!c.eat("+")) throw std::invalid_argument("method parse: '+' expected in " + s);
        m.mod = MethodExpr::Mod::QdmPlusT;
        m.t = c.number();
    }
    if (c.eat("+G")) {
        auto ga = c.arglist();
        if (ga.size() != 1) throw std::invalid_argument("method parse: +G wants one arg in " + s);
        m.g_rounds = ga[0];
    }
    if (m.mod == MethodExpr::Mod::None && c.peek() == '+') {
        c.eat("+");
        m.mod = MethodExpr::Mod::PlusT;
        m.t = c.number();
    } else if (c.peek() == '-') {
        if (m.mod != MethodExpr::Mod::None)
            throw std::invalid_argument("method parse: conflicting modifiers in " + s);
        c.eat("-");
        m.t = c.number();
        if (c.eat(",B"))
            m.mod = MethodExpr::Mod::MinusTB;
        else
            m.mod = m.t == 1 ? MethodExpr::Mod::MinusOne : MethodExpr::Mod::MinusT;
    }
    if (!c.done()) throw std::invalid_argument("method parse: trailing junk in " + s);
    return m;
}

std::string MethodExpr::str() const {
    std::ostringstream out;
    switch (base) {
        case Base::KTS: out << "KTS"; break;
        case Base::NKTS: out << "NKTS"; break;
        case Base::RBIBD: out << "RBIBD"; break;
        case Base::RTD: out << "RTD"; break;
        case Base::RGDD: out << "RGDD"; break;
        case Base::URD: out << "URD"; break;
        case Base::RITD: out << "RITD"; break;
        case Base::MOLRS: out << "MOLRs"; break;
        case Base::OWNSG: out << "ownSG"; break;
        case Base::SINGLE: out << "single-round"; return out.str();
    }
    out << "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out << (base == Base::RITD && i == 2 ? ";" : ",");
        out << args[i];
    }
    out << ")";
    if (mod == Mod::DmPlusT) out << "_D+" << t;
    if (mod == Mod::QdmPlusT) out << "_Q(" << q_g << "," << q_u << ")+" << t;
    if (g_rounds > 0) out << "+G(" << g_rounds << ")";
    if (mod == Mod::MinusOne || mod == Mod::MinusT) out << "-" << t;
    if (mod == Mod::MinusTB) out << "-" << t << ",B";
    if (mod == Mod::PlusT) out << "+" << t;
    return out.str();
}

}  // namespace sgp
