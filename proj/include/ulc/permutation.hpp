#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ulc {

// A permutation of the label set {1..s}, stored as its image array:
// image[i-1] is the image of label i.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img) : image(std::move(img)) {
        if (!is_valid()) throw std::invalid_argument("not a permutation");
    }

    static Permutation identity(int s) {
        std::vector<int> img(s);
        for (int i = 0; i < s; ++i) img[i] = i + 1;
        return Permutation(std::move(img));
    }

    // The transposition swapping labels 1 and 2 on alphabet size s >= 2.
    static Permutation swap12(int s) {
        Permutation p = identity(s);
        p.image[0] = 2;
        p.image[1] = 1;
        return p;
    }

    // Cyclic shift i -> ((i-1+g) mod s)+1.
    static Permutation shift(int s, int g) {
        std::vector<int> img(s);
        for (int i = 0; i < s; ++i) img[i] = (i + g % s + s) % s + 1;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }

    int operator()(int label) const { return image[label - 1]; }

    // Preimage of `label`; linear scan, s is a small parameter.
    int preimage(int label) const {
        for (int i = 0; i < size(); ++i)
            if (image[i] == label) return i + 1;
        throw std::logic_error("label out of range");
    }

    bool is_valid() const {
        int s = size();
        std::vector<char> seen(s, 0);
        for (int v : image) {
            if (v < 1 || v > s || seen[v - 1]) return false;
            seen[v - 1] = 1;
        }
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline Permutation perm_inverse(const Permutation& p) {
    std::vector<int> img(p.size());
    for (int i = 1; i <= p.size(); ++i) img[p(i) - 1] = i;
    return Permutation(std::move(img));
}

inline Permutation compose(const Permutation& outer, const Permutation& inner) {
    std::vector<int> img(inner.size());
    for (int i = 1; i <= inner.size(); ++i) img[i - 1] = outer(inner(i));
    return Permutation(std::move(img));
}

}  // namespace ulc
