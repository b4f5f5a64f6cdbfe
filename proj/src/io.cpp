#include "ulc/io.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "ulc/aux_graph.hpp"

namespace ulc {

namespace {

bool content_line(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

struct LineReader {
    std::istream& in;
    int lineno = 0;

    // Next non-comment, non-blank line; false on EOF.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (content_line(line)) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

int parse_int(std::istringstream& ss, int lineno, const char* what) {
    long long v;
    if (!(ss >> v)) throw ParseError(lineno, std::string("expected ") + what);
    if (v < -1000000000LL || v > 1000000000LL)
        throw ParseError(lineno, std::string(what) + " out of range");
    return static_cast<int>(v);
}

void expect_word(std::istringstream& ss, int lineno, const std::string& word) {
    std::string w;
    if (!(ss >> w) || w != word)
        throw ParseError(lineno, "expected '" + word + "'");
}

void expect_end(std::istringstream& ss, int lineno) {
    std::string w;
    if (ss >> w) throw ParseError(lineno, "unexpected token '" + w + "'");
}

}  // namespace

Instance parse_instance(std::istream& in) {
    LineReader rd{in};
    std::string line;

    if (!rd.next(line)) throw ParseError(1, "empty input");
    {
        std::istringstream ss(line);
        expect_word(ss, rd.lineno, "ulc");
        int ver = parse_int(ss, rd.lineno, "format version");
        if (ver != 1) throw ParseError(rd.lineno, "unsupported format version");
        expect_end(ss, rd.lineno);
    }

    if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing header line");
    int n, m, s, k;
    {
        std::istringstream ss(line);
        expect_word(ss, rd.lineno, "n");
        n = parse_int(ss, rd.lineno, "n");
        expect_word(ss, rd.lineno, "m");
        m = parse_int(ss, rd.lineno, "m");
        expect_word(ss, rd.lineno, "sigma");
        s = parse_int(ss, rd.lineno, "sigma");
        expect_word(ss, rd.lineno, "k");
        k = parse_int(ss, rd.lineno, "k");
        expect_end(ss, rd.lineno);
        if (n < 0) throw ParseError(rd.lineno, "n must be non-negative");
        if (m < 0) throw ParseError(rd.lineno, "m must be non-negative");
        if (s < 1 || s > 64) throw ParseError(rd.lineno, "sigma must be in 1..64");
        if (k < 0) throw ParseError(rd.lineno, "k must be non-negative");
    }

    std::vector<TauSet> tau(n + 1, tau_full(s));
    std::vector<char> tau_seen(n + 1, 0);
    std::vector<char> undel(n + 1, 0);
    std::vector<GraphEdge> edges;
    std::set<std::pair<int, int>> edge_keys;

    while (rd.next(line)) {
        std::istringstream ss(line);
        std::string kw;
        ss >> kw;
        if (kw == "v") {
            int id = parse_int(ss, rd.lineno, "vertex id");
            if (id < 1 || id > n) throw ParseError(rd.lineno, "vertex id out of range");
            if (tau_seen[id]) throw ParseError(rd.lineno, "duplicate tau line for vertex");
            tau_seen[id] = 1;
            expect_word(ss, rd.lineno, "tau");
            TauSet t = 0;
            int lab;
            while (ss >> lab) {
                if (lab < 1 || lab > s) throw ParseError(rd.lineno, "label out of range");
                t |= tau_single(lab);
            }
            tau[id] = t;
        } else if (kw == "undeletable") {
            int id = parse_int(ss, rd.lineno, "vertex id");
            if (id < 1 || id > n) throw ParseError(rd.lineno, "vertex id out of range");
            expect_end(ss, rd.lineno);
            undel[id] = 1;
        } else if (kw == "e") {
            int u = parse_int(ss, rd.lineno, "endpoint");
            int v = parse_int(ss, rd.lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(rd.lineno, "endpoint out of range");
            if (u == v) throw ParseError(rd.lineno, "self-loop");
            std::vector<int> img(s);
            for (int i = 0; i < s; ++i) img[i] = parse_int(ss, rd.lineno, "permutation entry");
            expect_end(ss, rd.lineno);
            Permutation p;
            try {
                p = Permutation(std::move(img));
            } catch (const std::invalid_argument&) {
                throw ParseError(rd.lineno, "not a permutation of 1..sigma");
            }
            // Stored once for the smaller endpoint; phi_{e,v} = phi_{e,u}^{-1}.
            GraphEdge e;
            if (u < v) {
                e = {u, v, std::move(p)};
            } else {
                e = {v, u, perm_inverse(p)};
            }
            if (!edge_keys.emplace(e.u, e.v).second)
                throw ParseError(rd.lineno, "duplicate edge");
            edges.push_back(std::move(e));
        } else {
            throw ParseError(rd.lineno, "unknown directive '" + kw + "'");
        }
    }
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(rd.lineno, "edge count does not match header (got " +
                                        std::to_string(edges.size()) + ", expected " +
                                        std::to_string(m) + ")");

    Instance inst = make_instance(n, s, k, std::move(edges));
    inst.tau = std::move(tau);
    inst.undeletable = std::move(undel);
    return inst;
}

Instance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

void serialize_instance(std::ostream& out, const Instance& inst,
                        const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "ulc 1\n";
    out << "n " << inst.n() << " m " << inst.m() << " sigma " << inst.s()
        << " k " << inst.k << "\n";
    for (int v = 1; v <= inst.n(); ++v) {
        if (inst.tau[v] == tau_full(inst.s())) continue;
        out << "v " << v << " tau";
        for (int l = 1; l <= inst.s(); ++l)
            if (tau_contains(inst.tau[v], l)) out << " " << l;
        out << "\n";
    }
    for (int v = 1; v <= inst.n(); ++v)
        if (inst.undeletable[v]) out << "undeletable " << v << "\n";
    for (const GraphEdge& e : inst.topo->edges) {
        out << "e " << e.u << " " << e.v;
        for (int i = 1; i <= inst.s(); ++i) out << " " << e.perm(i);
        out << "\n";
    }
}

void serialize_solution(std::ostream& out, const Solution& sol) {
    if (!sol.yes) {
        out << "NO\n";
        return;
    }
    out << "YES\ndelete";
    for (int v : sol.deletions) out << " " << v;
    out << "\n";
    for (int v = 1; v < static_cast<int>(sol.labels.size()); ++v)
        if (sol.labels[v] != 0) out << "label " << v << " " << sol.labels[v] << "\n";
}

Solution parse_solution(std::istream& in) {
    LineReader rd{in};
    std::string line;
    Solution sol;
    if (!rd.next(line)) throw ParseError(1, "empty solution");
    {
        std::istringstream ss(line);
        std::string w;
        ss >> w;
        if (w == "NO") {
            expect_end(ss, rd.lineno);
            return sol;
        }
        if (w != "YES") throw ParseError(rd.lineno, "expected YES or NO");
        expect_end(ss, rd.lineno);
    }
    sol.yes = true;
    if (!rd.next(line)) throw ParseError(rd.lineno + 1, "missing delete line");
    {
        std::istringstream ss(line);
        expect_word(ss, rd.lineno, "delete");
        int v;
        while (ss >> v) sol.deletions.push_back(v);
    }
    while (rd.next(line)) {
        std::istringstream ss(line);
        expect_word(ss, rd.lineno, "label");
        int v = parse_int(ss, rd.lineno, "vertex id");
        int lab = parse_int(ss, rd.lineno, "label");
        expect_end(ss, rd.lineno);
        if (v < 1) throw ParseError(rd.lineno, "vertex id out of range");
        if (static_cast<int>(sol.labels.size()) <= v) sol.labels.resize(v + 1, 0);
        sol.labels[v] = lab;
    }
    return sol;
}

Solution parse_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_solution(in);
}

void write_aux_graph(std::ostream& out, const Instance& inst) {
    AuxView view(inst);
    out << "aux " << inst.n() * inst.s() << " " << inst.alive_edge_count() * inst.s()
        << "\n";
    for (int a = 0; a < view.count(); ++a) {
        view.for_neighbors(a, [&](int b) {
            if (a < b) out << a << " " << b << "\n";
        });
    }
}

}  // namespace ulc
