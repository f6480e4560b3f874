#ifndef HOPFALG_PRESENTED_HPP
#define HOPFALG_PRESENTED_HPP

#include <map>
#include <string>
#include <vector>

#include "hopfalg/hopf.hpp"

namespace hopfalg {

/// Word in the generators of a presented algebra (empty word = 1).
using Word = std::vector<int>;

/// Noncommutative polynomial: word -> coefficient.
class NCPoly {
public:
    std::map<Word, Scalar> terms;

    static NCPoly word(Word w, Scalar c = Scalar(1)) {
        NCPoly p;
        if (!c.is_zero()) p.terms[std::move(w)] = std::move(c);
        return p;
    }
    static NCPoly one() { return word({}); }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms) {
            auto it = terms.find(w);
            if (it == terms.end())terms.emplace(w, c);
            else {
                it->second += c;
                if (it->second.is_zero()) terms.erase(it);
            }
        }
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { a += b; return a; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { a += (-Scalar(1)) * b; return a; }
    friend NCPoly operator*(const Scalar& s, const NCPoly& p) {
        NCPoly r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : p.terms) r.terms[w] = s * c;
        return r;
    }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms)
            for (const auto& [wb, cb] : b.terms) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                auto it = r.terms.find(w);
                if (it == r.terms.end()) r.terms.emplace(std::move(w), ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms.erase(it);
                }
            }
        return r;
    }
    bool is_zero() const { return terms.empty(); }
};

/// Generators-and-relations description paired with the ordered monomials
/// asserted to span any certified model.
struct PresentedAlgebra {
    std::vector<std::string> generators;
    std::vector<NCPoly> relations;
    std::vector<std::string> relation_names;
    std::vector<Word> pbw_monomials;

    void add_relation(std::string name, NCPoly p) {
        relation_names.push_back(std::move(name));
        relations.push_back(std::move(p));
    }
};

/// Assignment of generator labels to elements of a structure-constant model.
struct GeneratorEmbedding {
    const FinDimHopf* target = nullptr;
    std::vector<Vec> assignment; // one coordinate vector per generator

    Vec eval_word(const Word& w) const {
        Vec acc = target->unit;
        for (int g : w) acc = el_mult(*target, acc, assignment[size_t(g)]);
        return acc;
    }
    Vec eval_poly(const NCPoly& p) const {
        Vec acc(target->dim);
        for (const auto& [w, c] : p.terms) {
            Vec wv = eval_word(w);
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += c * wv[i];
        }
        return acc;
    }
};

/// Checks every relation; returns the first failing relation name, or "".
inline std::string check_relations(const PresentedAlgebra& pres, const GeneratorEmbedding& emb) {
    for (size_t r = 0; r < pres.relations.size(); ++r) {
        Vec v = emb.eval_poly(pres.relations[r]);
        for (const auto& s : v)
            if (!s.is_zero()) return pres.relation_names[r];
    }
    return "";
}

/// Matrix-model evaluation of words and polynomials.
inline Mat eval_word_mat(const std::vector<Mat>& gen, size_t dim, const Word& w) {
    Mat acc = Mat::identity(dim);
    for (int g : w) acc = acc * gen[size_t(g)];
    return acc;
}
inline Mat eval_poly_mat(const std::vector<Mat>& gen, size_t dim, const NCPoly& p) {
    Mat acc(dim, dim);
    for (const auto& [w, c] : p.terms) {
        Mat m = eval_word_mat(gen, dim, w);
        acc = acc + c * m;
    }
    return acc;
}

} // namespace hopfalg

#endif
