#include "loopsym/variables.hpp"

#include <cstdlib>

namespace loopsym {

std::string var_to_key(const VarId& v) {
    return "x:" + std::to_string(v.flow) + ":" + std::to_string(v.color + 1);
}

VarId var_from_key(const Ambient& amb, const std::string& key) {
    auto bad = [&]() -> domain_error { return domain_error("malformed variable key: " + key); };
    if (key.size() < 5 || key[0] != 'x' || key[1] != ':')
        throw bad();
    auto second = key.find(':', 2);
    if (second == std::string::npos || second + 1 >= key.size())
        throw bad();
    const std::string flow_s = key.substr(2, second - 2);
    const std::string color_s = key.substr(second + 1);
    if (flow_s.empty() || color_s.empty())
        throw bad();
    for (char c : flow_s + color_s)
        if (c < '0' || c > '9')
            throw bad();
    int flow = std::atoi(flow_s.c_str());
    int color = std::atoi(color_s.c_str());
    if (color < 1 || color > amb.n)
        throw domain_error("color label " + std::to_string(color) + " outside 1.." +
                           std::to_string(amb.n) + " in key " + key);
    return make_var(amb, flow, color);
}

} // namespace loopsym
