// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "kybermat/polyphase.hpp"

namespace kybermat {

namespace {

struct Header {
    std::string kind;
    std::string domain;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t L = 0;
};

// Reader with a line counter so parse errors can name the offending line.
// The counter is per-reader, i.e. per document when documents are
// concatenated in one stream.
struct Reader {
    std::istream& is;
    std::size_t lineno = 0;

    std::string next_line()
    {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (!line.empty())
                return line;
        }
        throw IoError("unexpected end of file after line " +
                      std::to_string(lineno));
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw IoError(what + " (line " + std::to_string(lineno) + ")");
    }
};

void write_header(std::ostream& os, const std::string& kind,
                  const std::string& domain, std::size_t k, std::size_t n,
                  std::size_t L)
{
    os << "kybermat v1 kind=" << kind << " k=" << k << " n=" << n
       << " q=" << kQ << " L=" << L << " domain=" << domain
       << " order=" << kEvalOrder << "\n";
}

void write_entry(std::ostream& os, std::size_t i, std::size_t j, std::size_t t,
                 const std::vector<Residue>& vals)
{
    os << "entry i=" << i << " j=" << j << " phase=" << t << ":\n";
    for (std::size_t c = 0; c < vals.size(); ++c)
        os << (c ? " " : "") << vals[c];
    os << "\n";
}

std::size_t parse_field(Reader& r, std::istringstream& is, const std::string& key)
{
    std::string tok;
    if (!(is >> tok) || tok.rfind(key + "=", 0) != 0)
        r.fail("expected field " + key);
    const std::string val = tok.substr(key.size() + 1);
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(val, &pos);
        if (pos != val.size())
            r.fail("bad integer in field " + key);
        return static_cast<std::size_t>(v);
    } catch (const IoError&) {
        throw;
    } catch (...) {
        r.fail("bad integer in field " + key);
    }
}

void expect_token(Reader& r, std::istringstream& is, const std::string& want)
{
    std::string tok;
    if (!(is >> tok) || tok != want)
        r.fail("expected token " + want);
}

Header read_header(Reader& r)
{
    std::istringstream is(r.next_line());
    expect_token(r, is, "kybermat");
    expect_token(r, is, "v1");

    std::string tok;
    Header h;
    if (!(is >> tok) || tok.rfind("kind=", 0) != 0)
        r.fail("expected field kind");
    h.kind = tok.substr(5);
    if (h.kind != "matrix" && h.kind != "vector" && h.kind != "output")
        r.fail("unknown kind " + h.kind);

    h.k = parse_field(r, is, "k");
    h.n = parse_field(r, is, "n");
    if (parse_field(r, is, "q") != kQ)
        r.fail("unsupported modulus");
    h.L = parse_field(r, is, "L");

    if (!(is >> tok) || tok.rfind("domain=", 0) != 0)
        r.fail("expected field domain");
    h.domain = tok.substr(7);
    if (h.domain != "ntt" && h.domain != "coeff")
        r.fail("unknown domain " + h.domain);

    expect_token(r, is, std::string("order=") + std::string(kEvalOrder));
    if (h.k == 0 || (h.L != 2 && h.L != 4) || h.n % h.L != 0)
        r.fail("inconsistent header dimensions");
    return h;
}

std::vector<Residue> read_entry(Reader& r, std::size_t i, std::size_t j,
                                std::size_t t, std::size_t m)
{
    {
        std::istringstream is(r.next_line());
        expect_token(r, is, "entry");
        std::ostringstream want;
        want << "i=" << i;
        expect_token(r, is, want.str());
        want.str("");
        want << "j=" << j;
        expect_token(r, is, want.str());
        want.str("");
        want << "phase=" << t << ":";
        expect_token(r, is, want.str());
        std::string extra;
        if (is >> extra)
            r.fail("trailing data after entry header");
    }

    std::istringstream body(r.next_line());
    std::vector<Residue> vals(m);
    for (std::size_t c = 0; c < m; ++c) {
        long long x = -1;
        if (!(body >> x) || x < 0 || x >= static_cast<long long>(kQ))
            r.fail("bad residue in entry body");
        vals[c] = static_cast<Residue>(x);
    }
    long long extra;
    if (body >> extra)
        r.fail("trailing data in entry body");
    return vals;
}

} // namespace

void write_matrix(std::ostream& os, const NttDomainMatrix& a)
{
    const std::size_t m = a.entries[0][0][0].size();
    write_header(os, "matrix", "ntt", a.k, m * a.L, a.L);
    for (std::size_t i = 0; i < a.k; ++i)
        for (std::size_t j = 0; j < a.k; ++j)
            for (std::size_t t = 0; t < a.L; ++t)
                write_entry(os, i, j, t, a.entries[i][j][t].evals);
}

void write_vector(std::ostream& os, const NttDomainVector& v,
                  const std::string& kind)
{
    if (kind != "vector" && kind != "output")
        throw std::invalid_argument("write_vector: bad kind");
    const std::size_t m = v.entries[0][0].size();
    write_header(os, kind, "ntt", v.k, m * v.L, v.L);
    for (std::size_t i = 0; i < v.k; ++i)
        for (std::size_t t = 0; t < v.L; ++t)
            write_entry(os, i, 0, t, v.entries[i][t].evals);
}

void write_poly_vector(std::ostream& os, const PolyVector& r, std::size_t L,
                       const std::string& kind)
{
    if (kind != "vector" && kind != "output")
        throw std::invalid_argument("write_poly_vector: bad kind");
    const std::size_t n = r.entries[0].size();
    write_header(os, kind, "coeff", r.k(), n, L);
    for (std::size_t i = 0; i < r.k(); ++i) {
        const PhaseSplit s = decompose(r.entries[i], L);
        for (std::size_t t = 0; t < L; ++t)
            write_entry(os, i, 0, t, s.phases[t].coeffs);
    }
}

NttDomainMatrix read_matrix(std::istream& is)
{
    Reader r{is};
    const Header h = read_header(r);
    if (h.kind != "matrix")
        r.fail("expected a matrix document, got " + h.kind);
    if (h.domain != "ntt")
        r.fail("matrix documents must be ntt domain");

    NttDomainMatrix a;
    a.k = h.k;
    a.L = h.L;
    a.entries.assign(h.k, std::vector<std::vector<NttVector>>(h.k));
    const std::size_t m = h.n / h.L;
    for (std::size_t i = 0; i < h.k; ++i)
        for (std::size_t j = 0; j < h.k; ++j) {
            a.entries[i][j].resize(h.L);
            for (std::size_t t = 0; t < h.L; ++t)
                a.entries[i][j][t].evals = read_entry(r, i, j, t, m);
        }
    return a;
}

NttDomainVector read_vector(std::istream& is, std::string* kind_out)
{
    Reader r{is};
    const Header h = read_header(r);
    if (h.kind != "vector" && h.kind != "output")
        r.fail("expected a vector document, got " + h.kind);
    if (h.domain != "ntt")
        r.fail("expected an ntt-domain vector document");
    if (kind_out)
        *kind_out = h.kind;

    NttDomainVector v;
    v.k = h.k;
    v.L = h.L;
    v.entries.resize(h.k);
    const std::size_t m = h.n / h.L;
    for (std::size_t i = 0; i < h.k; ++i) {
        v.entries[i].resize(h.L);
        for (std::size_t t = 0; t < h.L; ++t)
            v.entries[i][t].evals = read_entry(r, i, 0, t, m);
    }
    return v;
}

PolyVector read_poly_vector(std::istream& is, std::size_t* L_out,
                            std::string* kind_out)
{
    Reader r{is};
    const Header h = read_header(r);
    if (h.kind != "vector" && h.kind != "output")
        r.fail("expected a vector document, got " + h.kind);
    if (h.domain != "coeff")
        r.fail("expected a coefficient-domain vector document");
    if (L_out)
        *L_out = h.L;
    if (kind_out)
        *kind_out = h.kind;

    const std::size_t m = h.n / h.L;
    PolyVector out(h.k, h.n);
    for (std::size_t i = 0; i < h.k; ++i) {
        PhaseSplit s;
        s.L = h.L;
        s.phases.resize(h.L);
        for (std::size_t t = 0; t < h.L; ++t)
            s.phases[t].coeffs = read_entry(r, i, 0, t, m);
        out.entries[i] = recompose(s);
    }
    return out;
}

} // namespace kybermat
