#include "spinflat/affine.hpp"

#include <fstream>
#include <sstream>

namespace spinflat {

AffineIsometry AffineIsometry::identity(int n) {
    return AffineIsometry(RatMat::identity(n), std::vector<Rat>(n));
}

AffineIsometry AffineIsometry::lattice_translation(int n, int i, int exponent) {
    if (i < 1 || i > n) throw InternalError("lattice index out of range");
    AffineIsometry a = identity(n);
    a.tr[i - 1] = Rat(exponent);
    return a;
}

AffineIsometry AffineIsometry::compose(const AffineIsometry& o) const {
    if (dim() != o.dim()) throw InternalError("affine dimension mismatch");
    AffineIsometry r;
    r.lin = lin * o.lin;
    r.tr = lin * o.tr;
    for (int i = 0; i < dim(); ++i) r.tr[i] = r.tr[i] + tr[i];
    return r;
}

AffineIsometry AffineIsometry::inverse() const {
    AffineIsometry r;
    r.lin = lin.inverse();
    std::vector<Rat> v = r.lin * tr;
    r.tr.resize(dim());
    for (int i = 0; i < dim(); ++i) r.tr[i] = -v[i];
    return r;
}

namespace {

// Tokenizer stripping '#' comments to end of line.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

} // namespace

CrystalGroupInput parse_group(std::istream& in) {
    std::vector<std::string> tokens = tokenize(in);
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size()) throw ParseError("unexpected end of input");
        return tokens[pos++];
    };

    if (tokens.empty() || next() != "dim") throw ParseError("input must start with 'dim n'");
    Rat dim = parse_rat(next());
    if (!dim.is_integer() || dim.num < 1 || dim.num > 8)
        throw ParseError("dimension must be an integer in [1,8]");
    CrystalGroupInput g;
    g.n = static_cast<int>(dim.num);

    while (pos < tokens.size()) {
        if (next() != "gen") throw ParseError("expected 'gen', got '" + tokens[pos - 1] + "'");
        int h = g.n + 1;
        RatMat m(h);
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < h; ++c) m.at(r, c) = parse_rat(next());
        for (int c = 0; c < h; ++c) {
            Rat expect = (c == g.n) ? Rat(1) : Rat(0);
            if (m.at(g.n, c) != expect)
                throw ParseError("generator matrix last row must be (0,...,0,1)");
        }
        AffineIsometry gen;
        gen.lin = RatMat(g.n);
        gen.tr.resize(g.n);
        for (int r = 0; r < g.n; ++r) {
            for (int c = 0; c < g.n; ++c) {
                if (!m.at(r, c).is_integer())
                    throw ParseError("generator linear part must be integral");
                gen.lin.at(r, c) = m.at(r, c);
            }
            gen.tr[r] = m.at(r, g.n);
        }
        Rat d = gen.lin.det();
        if (d != Rat(1) && d != Rat(-1))
            throw ParseError("generator linear part must have determinant +-1, got " + d.str());
        g.gens.push_back(std::move(gen));
    }
    return g;
}

CrystalGroupInput parse_group_string(const std::string& text) {
    std::istringstream in(text);
    return parse_group(in);
}

CrystalGroupInput parse_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_group(in);
}

AffineIsometry eval_affine_word(const Word& word, const std::vector<AffineIsometry>& gens) {
    if (gens.empty() && !word.empty()) throw InternalError("word over empty generator list");
    int n = gens.empty() ? 0 : gens[0].dim();
    AffineIsometry acc = AffineIsometry::identity(n);
    for (int letter : word) {
        int j = letter > 0 ? letter : -letter;
        if (j < 1 || j > static_cast<int>(gens.size()))
            throw InternalError("word letter out of range");
        acc = acc.compose(letter > 0 ? gens[j - 1] : gens[j - 1].inverse());
    }
    return acc;
}

LatticeWord translation_exponents(const AffineIsometry& g) {
    if (g.lin != RatMat::identity(g.dim()))
        throw InternalError("element has non-identity linear part");
    LatticeWord alpha(g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        if (!g.tr[i].is_integer())
            throw InternalError("pure translation is not integral; lattice is not Z^n");
        alpha[i] = g.tr[i].num;
    }
    return alpha;
}

LatticeWord word_to_lattice(const Word& word, const CrystalGroupInput& group) {
    std::vector<AffineIsometry> letters = group.gens;
    for (int i = 1; i <= group.n; ++i)
        letters.push_back(AffineIsometry::lattice_translation(group.n, i));
    return translation_exponents(eval_affine_word(word, letters));
}

std::vector<IntMat> holonomy_matrices(const CrystalGroupInput& group) {
    std::vector<IntMat> ms;
    ms.reserve(group.gens.size());
    for (const AffineIsometry& g : group.gens) ms.push_back(g.lin.to_int());
    return ms;
}

} // namespace spinflat
