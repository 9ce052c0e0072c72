#pragma once

#include <string>

namespace eigenstrata {

enum class Ensemble { GUE, GOE, Wishart };

// Wishart means the unitary (beta=2) Laguerre ensemble, M = N + alpha
struct EnsembleSpec {
    Ensemble kind = Ensemble::GUE;
    int N = 20;
    int alpha = 0;

    static EnsembleSpec gue(int n) { return {Ensemble::GUE, n, 0}; }
    static EnsembleSpec goe(int n) { return {Ensemble::GOE, n, 0}; }
    static EnsembleSpec wishart(int n, int a) { return {Ensemble::Wishart, n, a}; }

    bool gaussian() const { return kind != Ensemble::Wishart; }
    int M() const { return N + alpha; }
};

// throws InvalidSpec
void validate(const EnsembleSpec& spec);

const char* to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& s);

}  // namespace eigenstrata
