#include "posetcode/io.hpp"

#include <fstream>
#include <sstream>

#include "posetcode/errors.hpp"

namespace posetcode {

namespace {

// Strips comments/whitespace; empty result means the line is skipped.
std::string significant(const std::string& line) {
    std::string s = line;
    if (auto hash = s.find('#'); hash != std::string::npos) {
        s.erase(hash);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r' || s.back() == '\n')) {
        s.pop_back();
    }
    std::size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string{} : s.substr(start);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) {
            fail(line_no, "bad integer '" + tok + "'");
        }
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, "bad integer '" + tok + "'");
    }
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream ss(s);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) {
        out.push_back(tok);
    }
    return out;
}

Subset parse_word(const std::string& tok, int len, int line_no) {
    if (static_cast<int>(tok.size()) != len) {
        fail(line_no, "expected " + std::to_string(len) + " binary digits");
    }
    Subset s = 0;
    for (int j = 0; j < len; ++j) {
        char c = tok[static_cast<std::size_t>(j)];
        if (c == '1') {
            s |= bit(j);
        } else if (c != '0') {
            fail(line_no, "expected binary digits, got '" + tok + "'");
        }
    }
    return s;
}

} // namespace

Poset parse_poset(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> covers;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = significant(line);
        if (s.empty()) {
            continue;
        }
        std::vector<std::string> tok = tokens(s);
        if (n < 0) {
            if (tok.size() != 2 || tok[0] != "n") {
                fail(line_no, "expected header 'n <count>'");
            }
            n = parse_int(tok[1], line_no);
            if (n < 0 || n > kMaxGround) {
                fail(line_no, "element count out of range");
            }
            continue;
        }
        if (tok.size() != 3 || tok[1] != "<") {
            fail(line_no, "expected cover relation 'a < b'");
        }
        int a = parse_int(tok[0], line_no);
        int b = parse_int(tok[2], line_no);
        if (a < 1 || a > n || b < 1 || b > n) {
            fail(line_no, "element out of range");
        }
        covers.emplace_back(a, b);
    }
    if (n < 0) {
        fail(line_no, "missing header 'n <count>'");
    }
    try {
        return Poset::from_covers(n, covers);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Poset parse_poset_text(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

std::string poset_to_text(const Poset& p) {
    std::ostringstream out;
    out << "n " << p.n() << "\n";
    for (auto [a, b] : p.cover_pairs_1based()) {
        out << a << " < " << b << "\n";
    }
    return out.str();
}

Code parse_code(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    bool linear = false;
    int m_rows = 0;
    std::vector<Subset> rows; // words or columns
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = significant(line);
        if (s.empty()) {
            continue;
        }
        std::vector<std::string> tok = tokens(s);
        if (n < 0) {
            if (tok.size() < 4 || tok[0] != "n" || tok[2] != "repr") {
                fail(line_no, "expected header 'n <len> repr <kind>'");
            }
            n = parse_int(tok[1], line_no);
            if (n < 1 || n > kMaxGround) {
                fail(line_no, "code length out of range");
            }
            if (tok[3] == "explicit" && tok.size() == 4) {
                linear = false;
            } else if (tok[3] == "linear" && tok.size() == 5) {
                linear = true;
                m_rows = parse_int(tok[4], line_no);
                if (m_rows < 1 || m_rows > kMaxGround) {
                    fail(line_no, "row count out of range");
                }
            } else {
                fail(line_no, "kind must be 'explicit' or 'linear <m>'");
            }
            continue;
        }
        if (tok.size() != 1) {
            fail(line_no, "expected one 0/1 string per line");
        }
        rows.push_back(parse_word(tok[0], linear ? m_rows : n, line_no));
    }
    if (n < 0) {
        fail(line_no, "missing header 'n <len> repr <kind>'");
    }
    if (linear) {
        if (static_cast<int>(rows.size()) != n) {
            fail(line_no, "expected exactly " + std::to_string(n) +
                              " check columns");
        }
        return Code::linear(n, m_rows, rows);
    }
    if (rows.empty()) {
        fail(line_no, "explicit code needs at least one word");
    }
    return Code::explicit_code(n, rows);
}

Code parse_code_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

std::string code_to_text(const Code& c) {
    std::ostringstream out;
    out << "n " << c.n() << " repr ";
    if (c.is_linear()) {
        out << "linear " << c.check_rows() << "\n";
        for (Subset col : c.columns()) {
            out << to_binary_string(col, c.check_rows()) << "\n";
        }
    } else {
        out << "explicit\n";
        for (Subset w : c.words()) {
            out << to_binary_string(w, c.n()) << "\n";
        }
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << bytes;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace posetcode
