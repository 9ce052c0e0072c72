#include "eigenstrata/ensemble.hpp"

#include <algorithm>
#include <cctype>

#include "eigenstrata/errors.hpp"

namespace eigenstrata {

void validate(const EnsembleSpec& spec) {
    if (spec.N < 1) fail(ErrorKind::InvalidSpec, "N must be positive");
    if (spec.kind == Ensemble::Wishart) {
        if (spec.alpha < 0) fail(ErrorKind::InvalidSpec, "alpha must be >= 0");
    } else if (spec.alpha != 0) {
        fail(ErrorKind::InvalidSpec, "alpha only applies to Wishart");
    }
}

const char* to_string(Ensemble e) {
    switch (e) {
    case Ensemble::GUE: return "gue";
    case Ensemble::GOE: return "goe";
    case Ensemble::Wishart: return "wishart";
    }
    return "?";
}

Ensemble parse_ensemble(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "gue") return Ensemble::GUE;
    if (t == "goe") return Ensemble::GOE;
    if (t == "wishart" || t == "lue") return Ensemble::Wishart;
    fail(ErrorKind::InvalidSpec, "unknown ensemble '" + s + "'");
}

}  // namespace eigenstrata
