#include "tdc/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

Coloring Coloring::from_classes(int order,
                                const std::vector<std::vector<int>>& classes) {
    Coloring c;
    c.class_of.assign(order, -1);
    c.num_classes = static_cast<int>(classes.size());
    for (int k = 0; k < c.num_classes; ++k) {
        if (classes[k].empty()) throw std::invalid_argument("empty color class");
        for (int v : classes[k]) {
            if (v < 0 || v >= order) throw std::out_of_range("vertex outside graph");
            if (c.class_of[v] != -1)
                throw std::invalid_argument("classes are not disjoint");
            c.class_of[v] = k;
        }
    }
    for (int v = 0; v < order; ++v)
        if (c.class_of[v] == -1)
            throw std::invalid_argument("classes do not cover the vertex set");
    return c;
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(num_classes);
    for (int v = 0; v < static_cast<int>(class_of.size()); ++v)
        out[class_of[v]].push_back(v);
    return out;
}

bool is_proper(const Graph& g, const Coloring& c, std::string* reason) {
    if (static_cast<int>(c.class_of.size()) != g.order()) {
        if (reason) *reason = "coloring does not cover the vertex set";
        return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (c.class_of[v] < 0 || c.class_of[v] >= c.num_classes) {
            if (reason) *reason = "class index out of range at vertex " + std::to_string(v);
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (c.class_of[u] == c.class_of[v]) {
            if (reason)
                *reason = "monochromatic edge " + std::to_string(u) + "-" +
                          std::to_string(v);
            return false;
        }
    }
    return true;
}

namespace {

Bitset class_mask(const Graph& g, const Coloring& c, int k) {
    Bitset mask(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (c.class_of[v] == k) mask.set(v);
    return mask;
}

} // namespace

std::variant<TdcCertificate, TdcViolation> is_tdc(const Graph& g, const Coloring& c) {
    if (g.order() == 0) throw std::invalid_argument("TDC undefined on the empty graph");
    if (degree_extremes(g).first < 1)
        throw std::invalid_argument("TDC undefined: minimum degree must be positive");

    std::string reason;
    if (!is_proper(g, c, &reason)) return TdcViolation{-1, reason};

    std::vector<Bitset> masks(c.num_classes, Bitset(g.order()));
    for (int k = 0; k < c.num_classes; ++k) masks[k] = class_mask(g, c, k);

    TdcCertificate cert{c, std::vector<int>(g.order(), -1)};
    for (int v = 0; v < g.order(); ++v) {
        for (int k = 0; k < c.num_classes; ++k) {
            if (masks[k].subset_of(g.neighbors(v))) {
                cert.witness[v] = k;
                break;
            }
        }
        if (cert.witness[v] < 0)
            return TdcViolation{v, "vertex " + std::to_string(v) +
                                       " totally dominates no color class"};
    }
    return cert;
}

bool is_total_dominating(const Graph& g, const std::vector<int>& members) {
    Bitset mask(g.order());
    for (int v : members) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex outside graph");
        mask.set(v);
    }
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(mask)) return false;
    return true;
}

std::vector<int> common_neighborhood(const Graph& g, const std::vector<int>& cls) {
    if (cls.empty()) throw std::invalid_argument("common neighbourhood of an empty class");
    Bitset mask(g.order());
    for (int v : cls) {
        if (v < 0 || v >= g.order()) throw std::out_of_range("vertex outside graph");
        mask.set(v);
    }
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (mask.subset_of(g.neighbors(v))) out.push_back(v);
    return out;
}

std::vector<int> private_neighbors(const Graph& g, const Coloring& c, int class_index) {
    if (class_index < 0 || class_index >= c.num_classes)
        throw std::out_of_range("class index out of range");
    std::string reason;
    if (!is_proper(g, c, &reason)) throw std::invalid_argument("coloring is not proper: " + reason);

    std::vector<Bitset> masks(c.num_classes, Bitset(g.order()));
    for (int k = 0; k < c.num_classes; ++k) masks[k] = class_mask(g, c, k);

    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        if (!masks[class_index].subset_of(g.neighbors(v))) continue;
        bool elsewhere = false;
        for (int k = 0; k < c.num_classes && !elsewhere; ++k)
            if (k != class_index && masks[k].subset_of(g.neighbors(v))) elsewhere = true;
        if (!elsewhere) out.push_back(v);
    }
    return out;
}

bool validate_tdc_certificate(const Graph& g, const TdcCertificate& cert,
                              std::string* reason) {
    std::string why;
    if (!is_proper(g, cert.coloring, &why)) {
        if (reason) *reason = why;
        return false;
    }
    if (static_cast<int>(cert.witness.size()) != g.order()) {
        if (reason) *reason = "witness vector size mismatch";
        return false;
    }
    std::vector<Bitset> masks(cert.coloring.num_classes, Bitset(g.order()));
    for (int v = 0; v < g.order(); ++v) masks[cert.coloring.class_of[v]].set(v);
    for (int v = 0; v < g.order(); ++v) {
        int k = cert.witness[v];
        if (k < 0 || k >= cert.coloring.num_classes) {
            if (reason) *reason = "witness index out of range at vertex " + std::to_string(v);
            return false;
        }
        if (masks[k].none() || !masks[k].subset_of(g.neighbors(v))) {
            if (reason)
                *reason = "witness class of vertex " + std::to_string(v) +
                          " is not totally dominated";
            return false;
        }
    }
    return true;
}

} // namespace tdc
