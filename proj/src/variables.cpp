#include "q5/variables.hpp"

namespace q5 {

char slot_letter(int slot) { return "xyztu"[slot]; }

namespace var {

std::string name(Var v) {
    if (v < kBinaryBase) {
        std::string s = "A";
        for (int b = 4; b >= 0; --b) s += ((v >> b) & 1) ? '1' : '0';
        return s;
    }
    if (v < kPrimedBase) {
        int k = v - kBinaryBase;
        return std::string(1, slot_letter(k / 2)) + std::to_string(k % 2);
    }
    if (v < kDoublePrimedBase) {
        int k = v - kPrimedBase;
        return std::string(1, slot_letter(k / 2)) + "'" + std::to_string(k % 2);
    }
    if (v < kSeriesT) {
        int k = v - kDoublePrimedBase;
        return std::string(1, slot_letter(k / 2)) + "''" + std::to_string(k % 2);
    }
    if (v == kSeriesT) return "t";
    if (v < kCount) return "u" + std::to_string(v - kTorusBase + 1);
    return "v" + std::to_string(v);
}

}  // namespace var
}  // namespace q5
