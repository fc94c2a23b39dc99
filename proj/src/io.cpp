#include "sgp/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sgp {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

std::map<std::string, std::string> header_fields(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;  // leading word
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, sep))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

Block parse_block(const std::string& line) {
    Block b;
    std::istringstream ss(line);
    int x;
    while (ss >> x) b.push_back(x);
    return b;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

}  // namespace

Allocation read_allocation(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty input");
    ++lineno;
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != "allocation") fail(name, lineno, "expected an allocation header");
    auto fields = header_fields(line);
    Allocation a;
    try {
        a.v = std::stoi(fields.at("v"));
        a.sizes = parse_int_list(fields.at("sizes"), ',');
        a.counts = parse_int_list(fields.at("counts"), ',');
    } catch (const std::exception&) {
        fail(name, lineno, "malformed header");
    }
    int declared_rounds = fields.count("rounds") ? std::stoi(fields["rounds"]) : -1;

    enum { Rounds, Cliques, Columns } section = Rounds;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (blank(line) || line[0] == '#') continue;
        if (line.rfind("round", 0) == 0 && line.find("rounds") == std::string::npos) {
            a.rounds.push_back({});
            section = Rounds;
            continue;
        }
        if (line == "cliques") {
            section = Cliques;
            continue;
        }
        if (line == "columns") {
            section = Columns;
            continue;
        }
        if (section == Rounds) {
            if (a.rounds.empty()) fail(name, lineno, "block before the first round marker");
            Block b = parse_block(line);
            if (b.empty()) fail(name, lineno, "unparseable block");
            a.rounds.back().push_back(b);
        } else if (section == Cliques) {
            a.cliques.push_back(parse_block(line));
        } else {
            ColumnRef col;
            std::istringstream ss(line);
            std::string pair;
            while (ss >> pair) {
                auto colon = pair.find(':');
                if (colon == std::string::npos) fail(name, lineno, "malformed column entry");
                col.push_back({std::stoi(pair.substr(0, colon)), std::stoi(pair.substr(colon + 1))});
            }
            a.columns.push_back(col);
        }
    }
    if (declared_rounds >= 0 && declared_rounds != (int)a.rounds.size())
        fail(name, lineno, "header declares " + std::to_string(declared_rounds) + " rounds but " +
                               std::to_string(a.rounds.size()) + " are present");
    return a;
}

Allocation read_allocation_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_allocation(f, path);
}

void write_allocation(std::ostream& out, const Allocation& a, bool with_metadata) {
    out << "allocation v=" << a.v << " sizes=";
    for (size_t i = 0; i < a.sizes.size(); ++i) out << (i ? "," : "") << a.sizes[i];
    out << " counts=";
    for (size_t i = 0; i < a.counts.size(); ++i) out << (i ? "," : "") << a.counts[i];
    out << " rounds=" << a.rounds.size() << "\n";
    for (size_t r = 0; r < a.rounds.size(); ++r) {
        out << "round " << r << "\n";
        for (const auto& b : a.rounds[r]) {
            for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
            out << "\n";
        }
    }
    if (with_metadata && !a.cliques.empty()) {
        out << "cliques\n";
        for (const auto& c : a.cliques) {
            for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
            out << "\n";
        }
    }
    if (with_metadata && !a.columns.empty()) {
        out << "columns\n";
        for (const auto& col : a.columns) {
            for (size_t i = 0; i < col.size(); ++i)
                out << (i ? " " : "") << col[i].first << ":" << col[i].second;
            out << "\n";
        }
    }
}

std::string allocation_to_string(const Allocation& a, bool with_metadata) {
    std::ostringstream ss;
    write_allocation(ss, a, with_metadata);
    return ss.str();
}

void write_allocation_file(const std::string& path, const Allocation& a, bool with_metadata) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    write_allocation(f, a, with_metadata);
}

DesignFile read_design(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty input");
    ++lineno;
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != "design") fail(name, lineno, "expected a design header");
    auto fields = header_fields(line);
    DesignFile d;
    d.type = fields.count("type") ? fields["type"] : "";
    int v = fields.count("v") ? std::stoi(fields["v"]) : 0;
    int k = fields.count("k") ? std::stoi(fields["k"]) : 0;

    std::vector<Round> classes;
    std::vector<int> class_sizes;
    std::vector<Block> plain_blocks, groups;
    Block hole;
    enum { None, Class, Blocks, Groups, Hole } section = None;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (blank(line) || line[0] == '#') continue;
        if (line.rfind("class", 0) == 0) {
            auto f2 = header_fields(line);
            classes.push_back({});
            class_sizes.push_back(f2.count("size") ? std::stoi(f2["size"]) : k);
            section = Class;
            continue;
        }
        if (line == "blocks") {
            section = Blocks;
            continue;
        }
        if (line == "groups") {
            section = Groups;
            continue;
        }
        if (line == "hole") {
            section = Hole;
            continue;
        }
        Block b = parse_block(line);
        if (b.empty()) fail(name, lineno, "unparseable line");
        switch (section) {
            case Class: classes.back().push_back(b); break;
            case Blocks: plain_blocks.push_back(b); break;
            case Groups: groups.push_back(b); break;
            case Hole: hole.insert(hole.end(), b.begin(), b.end()); break;
            case None: fail(name, lineno, "content before any section marker");
        }
    }

    if (d.type == "urd") {
        d.urd.v = v;
        d.urd.class_sizes = class_sizes;
        d.urd.classes = classes;
        return d;
    }
    if (d.type == "bibd" || d.type == "rbibd") {
        d.bibd.v = v;
        d.bibd.k = k;
        for (const auto& cls : classes) {
            std::vector<int> ids;
            for (const auto& b : cls) {
                ids.push_back((int)d.bibd.blocks.size());
                d.bibd.blocks.push_back(b);
            }
            d.bibd.resolution.push_back(ids);
        }
        for (const auto& b : plain_blocks) d.bibd.blocks.push_back(b);
        return d;
    }
    d.grouped.v = v;
    d.grouped.k = k;
    d.grouped.groups = groups;
    d.grouped.hole = hole;
    for (const auto& cls : classes) {
        std::vector<int> ids;
        for (const auto& b : cls) {
            ids.push_back((int)d.grouped.blocks.size());
            d.grouped.blocks.push_back(b);
        }
        d.grouped.resolution.push_back(ids);
    }
    for (const auto& b : plain_blocks) d.grouped.blocks.push_back(b);
    return d;
}

DesignFile read_design_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_design(f, path);
}

MolsSet read_mols(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty input");
    ++lineno;
    if (line.rfind("latin", 0) != 0) fail(name, lineno, "expected a latin header");
    auto fields = header_fields(line);
    MolsSet m;
    m.n = std::stoi(fields.at("n"));
    int count = std::stoi(fields.at("count"));
    for (int s = 0; s < count; ++s) {
        LatinSquare sq;
        sq.n = m.n;
        while ((int)sq.cells.size() < m.n) {
            if (!std::getline(in, line)) fail(name, lineno, "truncated square");
            ++lineno;
            line = trimmed(line);
            if (blank(line)) continue;
            Block row = parse_block(line);
            if ((int)row.size() != m.n) fail(name, lineno, "row of wrong length");
            sq.cells.push_back(row);
        }
        m.squares.push_back(sq);
    }
    return m;
}

MolsSet read_mols_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_mols(f, path);
}

StarterSet read_starters(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty input");
    ++lineno;
    if (line.rfind("starters", 0) != 0) fail(name, lineno, "expected a starters header");
    auto fields = header_fields(line);
    StarterSet s;
    s.v = std::stoi(fields.at("v"));
    s.k = std::stoi(fields.at("k"));
    int r = fields.count("r") ? std::stoi(fields["r"]) : -1;
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (blank(line) || line[0] == '#') continue;
        s.blocks.push_back(parse_int_list(line, ','));
    }
    if (r >= 0 && r != (int)s.blocks.size())
        fail(name, lineno, "starter count does not match the header");
    return s;
}

StarterSet read_starters_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_starters(f, path);
}

QuasiDiffMatrix read_qdm(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty input");
    ++lineno;
    if (line.rfind("qdm", 0) != 0) fail(name, lineno, "expected a qdm header");
    auto fields = header_fields(line);
    QuasiDiffMatrix q;
    q.n = std::stoi(fields.at("n"));
    q.k = std::stoi(fields.at("k"));
    q.lambda = std::stoi(fields.at("lambda"));
    q.mu = std::stoi(fields.at("mu"));
    q.u = std::stoi(fields.at("u"));
    if (fields.count("group") && fields["group"] != "Z" + std::to_string(q.n))
        fail(name, lineno, "only cyclic groups Z<n> are supported");
    while (std::getline(in, line)) {
        ++lineno;
        line = trimmed(line);
        if (blank(line) || line[0] == '#') continue;
        std::vector<int> row;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) row.push_back(tok == "-" ? kEmptyCell : std::stoi(tok));
        q.cells.push_back(row);
    }
    if ((int)q.cells.size() != q.k) fail(name, lineno, "row count does not match the header");
    return q;
}

QuasiDiffMatrix read_qdm_file(const std::string& path) {
    auto f = open_or_throw(path);
    return read_qdm(f, path);
}

DataRepo::DataRepo(std::string dir) : dir_(std::move(dir)) {}

std::string DataRepo::default_dir() {
    if (const char* env = std::getenv("SGP_DATA_DIR")) return env;
#ifdef SGP_DEFAULT_DATA_DIR
    return SGP_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

bool DataRepo::has(const std::string& rel) const {
    return std::filesystem::exists(std::filesystem::path(dir_) / rel);
}

std::string DataRepo::path(const std::string& rel) const {
    return (std::filesystem::path(dir_) / rel).string();
}

Allocation DataRepo::allocation(const std::string& rel) const {
    return read_allocation_file(path(rel));
}

DesignFile DataRepo::design(const std::string& rel) const { return read_design_file(path(rel)); }

MolsSet DataRepo::mols(const std::string& rel) const { return read_mols_file(path(rel)); }

StarterSet DataRepo::starters(const std::string& rel) const {
    return read_starters_file(path(rel));
}

bool DataRepo::has_bundled_mols(int n) const {
    return has("mols/mols" + std::to_string(n) + ".txt");
}

MolsSet DataRepo::bundled_mols(int n) const {
    return mols("mols/mols" + std::to_string(n) + ".txt");
}

bool DataRepo::has_starters(int v, int k) const {
    return has("starters/ownsg_" + std::to_string(v) + "_" + std::to_string(k) + ".txt");
}

StarterSet DataRepo::starters_for(int v, int k) const {
    return starters("starters/ownsg_" + std::to_string(v) + "_" + std::to_string(k) + ".txt");
}

}  // namespace sgp
