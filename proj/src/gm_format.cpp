#include "projsys/error.hpp"
#include "projsys/projsystem.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace projsys {

void write_gm(std::ostream& out, const ProjectiveSystem& ps) {
    const Matrix g = to_generator_matrix(ps);
    out << "q " << ps.q() << " poly " << ps.field().poly() << '\n';
    out << "k " << ps.k() << " n " << ps.n() << '\n';
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (c) out << ' ';
            out << static_cast<int>(g(r, c));
        }
        out << '\n';
    }
}

namespace {

std::string next_line(std::istream& in, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    throw Error(ErrorCode::Parse, "unexpected end of input after line " + std::to_string(line_no));
}

void expect(std::istringstream& ss, const char* word, int line_no) {
    std::string w;
    if (!(ss >> w) || w != word)
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected '" + word + "'");
}

long long read_int(std::istringstream& ss, int line_no) {
    long long v;
    if (!(ss >> v)) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected an integer");
    return v;
}

}  // namespace

ProjectiveSystem read_gm(std::istream& in) {
    int line_no = 0;
    std::istringstream h1(next_line(in, line_no));
    expect(h1, "q", line_no);
    const long long q = read_int(h1, line_no);
    expect(h1, "poly", line_no);
    const long long poly = read_int(h1, line_no);
    if (q < 2 || q > 64) throw Error(q > 64 ? ErrorCode::Unsupported : ErrorCode::NotPrimePower, "q = " + std::to_string(q));
    const Field field(static_cast<int>(q));
    if (poly != field.poly())
        throw Error(ErrorCode::Parse, "polynomial " + std::to_string(poly) + " is not the canonical one (" +
                                          std::to_string(field.poly()) + ") for q = " + std::to_string(q));

    std::istringstream h2(next_line(in, line_no));
    expect(h2, "k", line_no);
    const long long k = read_int(h2, line_no);
    expect(h2, "n", line_no);
    const long long n = read_int(h2, line_no);
    if (k < 1 || n < 0 || k > 64 || n > 1'000'000) throw Error(ErrorCode::Parse, "bad dimensions k or n");

    Matrix g(static_cast<int>(k), static_cast<int>(n));
    for (int r = 0; r < k; ++r) {
        std::istringstream row(next_line(in, line_no));
        for (int c = 0; c < n; ++c) {
            const long long v = read_int(row, line_no);
            if (v < 0 || v >= q)
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": element " + std::to_string(v) +
                                                  " outside [0,q)");
            g(r, c) = static_cast<Elem>(v);
        }
        std::string extra;
        if (row >> extra) throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": more than n entries");
    }
    return from_generator_matrix(field, g);
}

void write_gm_file(const std::string& path, const ProjectiveSystem& ps) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Parse, "cannot open " + path + " for writing");
    write_gm(out, ps);
}

ProjectiveSystem read_gm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    return read_gm(in);
}

}  // namespace projsys
