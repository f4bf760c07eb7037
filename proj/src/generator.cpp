#include "fy/generator.hpp"

#include <sstream>
#include <stdexcept>

namespace fy {

int cartan_entry(int i, int j, int N) {
    if (N < 3) throw std::invalid_argument("cartan_entry: N must be >= 3");
    auto norm = [N](int x) { return ((x % N) + N) % N; };
    int d = norm(i - j);
    if (d == 0) return 2;
    if (d == 1 || d == N - 1) return -1;
    return 0;
}

std::string generator_str(const GeneratorId& g) {
    std::ostringstream os;
    switch (g.kind) {
        case GenKind::Plus: os << "X+"; break;
        case GenKind::Minus: os << "X-"; break;
        case GenKind::Cartan: os << "H"; break;
    }
    os << " i=" << g.node << " r=" << g.mode;
    return os.str();
}

GeneratorId parse_generator(const std::string& s) {
    std::istringstream is(s);
    std::string kind, tok;
    if (!(is >> kind)) throw std::invalid_argument("generator: empty spec");
    GeneratorId g;
    if (kind == "X+") g.kind = GenKind::Plus;
    else if (kind == "X-") g.kind = GenKind::Minus;
    else if (kind == "H") g.kind = GenKind::Cartan;
    else throw std::invalid_argument("generator: unknown kind '" + kind + "'");
    bool have_i = false, have_r = false;
    while (is >> tok) {
        if (tok.rfind("i=", 0) == 0) { g.node = std::stoi(tok.substr(2)); have_i = true; }
        else if (tok.rfind("r=", 0) == 0) { g.mode = std::stoi(tok.substr(2)); have_r = true; }
        else throw std::invalid_argument("generator: unexpected token '" + tok + "'");
    }
    if (!have_i || !have_r) throw std::invalid_argument("generator: need both i= and r=");
    if (g.mode < 0) throw std::invalid_argument("generator: mode must be >= 0");
    return g;
}

} // namespace fy
