#include "sbs/stemmer.hpp"

#include "sbs/util.hpp"

#include <string>
#include <utility>

// English snowball stemmer (the revised Porter algorithm), ported from the
// published algorithm description.

namespace sbs::textprep::snowball {

namespace {

using std::u32string;
using std::u32string_view;

bool vowel(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
            return true;
        default:
            return false;
    }
}

bool ends_with(const u32string& w, u32string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_double(char32_t a, char32_t b) {
    if (a != b) return false;
    switch (a) {
        case U'b': case U'd': case U'f': case U'g': case U'm':
        case U'n': case U'p': case U'r': case U't':
            return true;
        default:
            return false;
    }
}

bool valid_li(char32_t c) {
    switch (c) {
        case U'c': case U'd': case U'e': case U'g': case U'h':
        case U'k': case U'm': case U'n': case U'r': case U't':
            return true;
        default:
            return false;
    }
}

// Short syllable: non-vowel, vowel, non-vowel (last not w/x/Y), or a word
// that is exactly vowel + non-vowel.
bool ends_short_syllable(const u32string& w) {
    const size_t n = w.size();
    if (n == 2) return vowel(w[0]) && !vowel(w[1]);
    if (n >= 3) {
        const char32_t c = w[n - 1];
        return !vowel(w[n - 3]) && vowel(w[n - 2]) && !vowel(c) &&
               c != U'w' && c != U'x' && c != U'Y';
    }
    return false;
}

struct Regions {
    size_t r1;
    size_t r2;
};

size_t after_vowel_consonant(const u32string& w, size_t from) {
    for (size_t i = from; i + 1 < w.size(); ++i) {
        if (vowel(w[i]) && !vowel(w[i + 1])) return i + 2;
    }
    return w.size();
}

Regions mark_regions(const u32string& w) {
    Regions r{w.size(), w.size()};
    if (w.rfind(U"gener", 0) == 0) r.r1 = 5;
    else if (w.rfind(U"commun", 0) == 0) r.r1 = 6;
    else if (w.rfind(U"arsen", 0) == 0) r.r1 = 5;
    else r.r1 = after_vowel_consonant(w, 0);
    r.r2 = after_vowel_consonant(w, r.r1);
    return r;
}

const std::pair<u32string_view, u32string_view> k_exceptions[] = {
    {U"skis", U"ski"}, {U"skies", U"sky"}, {U"dying", U"die"},
    {U"lying", U"lie"}, {U"tying", U"tie"}, {U"idly", U"idl"},
    {U"gently", U"gentl"}, {U"ugly", U"ugli"}, {U"early", U"earli"},
    {U"only", U"onli"}, {U"singly", U"singl"}, {U"sky", U"sky"},
    {U"news", U"news"}, {U"howe", U"howe"}, {U"atlas", U"atlas"},
    {U"cosmos", U"cosmos"}, {U"bias", U"bias"}, {U"andes", U"andes"},
};

constexpr u32string_view k_stop_after_1a[] = {
    U"inning", U"outing", U"canning", U"herring", U"earring",
    U"proceed", U"exceed", U"succeed",
};

void prelude(u32string& w) {
    if (!w.empty() && w[0] == U'\'') w.erase(0, 1);
    if (!w.empty() && w[0] == U'y') w[0] = U'Y';
    for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] == U'y' && vowel(w[i - 1])) w[i] = U'Y';
    }
}

void step0(u32string& w) {
    if (ends_with(w, U"'s'")) w.erase(w.size() - 3);
    else if (ends_with(w, U"'s")) w.erase(w.size() - 2);
    else if (ends_with(w, U"'")) w.erase(w.size() - 1);
}

void step1a(u32string& w) {
    if (ends_with(w, U"sses")) {
        w.erase(w.size() - 2);
    } else if (ends_with(w, U"ied") || ends_with(w, U"ies")) {
        w.erase(w.size() - 3);
        w += (w.size() > 1) ? U"i" : U"ie";
    } else if (ends_with(w, U"us") || ends_with(w, U"ss")) {
        // keep
    } else if (ends_with(w, U"s")) {
        for (size_t i = 0; i + 2 < w.size(); ++i) {
            if (vowel(w[i])) {
                w.pop_back();
                break;
            }
        }
    }
}

bool step1b(u32string& w, const Regions& r) {
    size_t suffix = 0;
    bool eed = false;
    if (ends_with(w, U"eedly")) { suffix = 5; eed = true; }
    else if (ends_with(w, U"ingly")) suffix = 5;
    else if (ends_with(w, U"edly")) suffix = 4;
    else if (ends_with(w, U"eed")) { suffix = 3; eed = true; }
    else if (ends_with(w, U"ing")) suffix = 3;
    else if (ends_with(w, U"ed")) suffix = 2;
    if (suffix == 0) return false;

    if (eed) {
        if (w.size() - suffix >= r.r1) {
            w.erase(w.size() - suffix);
            w += U"ee";
        }
        return true;
    }
    bool has_vowel = false;
    for (size_t i = 0; i + suffix < w.size(); ++i) {
        if (vowel(w[i])) { has_vowel = true; break; }
    }
    if (!has_vowel) return true;
    w.erase(w.size() - suffix);
    if (ends_with(w, U"at") || ends_with(w, U"bl") || ends_with(w, U"iz")) {
        w.push_back(U'e');
    } else if (w.size() >= 2 && is_double(w[w.size() - 2], w[w.size() - 1])) {
        w.pop_back();
    } else if (r.r1 >= w.size() && ends_short_syllable(w)) {
        w.push_back(U'e');
    }
    return true;
}

void step1c(u32string& w) {
    const size_t n = w.size();
    if (n >= 3 && (w[n - 1] == U'y' || w[n - 1] == U'Y') && !vowel(w[n - 2])) {
        w[n - 1] = U'i';
    }
}

struct Mapping {
    u32string_view suffix;
    u32string_view replacement;
};

// Suffix start must fall inside R1; longest match wins with no fallback.
constexpr Mapping k_step2[] = {
    {U"ational", U"ate"}, {U"fulness", U"ful"}, {U"iveness", U"ive"},
    {U"ization", U"ize"}, {U"ousness", U"ous"},
    {U"biliti", U"ble"}, {U"lessli", U"less"}, {U"tional", U"tion"},
    {U"alism", U"al"}, {U"aliti", U"al"}, {U"ation", U"ate"},
    {U"entli", U"ent"}, {U"fulli", U"ful"}, {U"iviti", U"ive"},
    {U"ousli", U"ous"},
    {U"abli", U"able"}, {U"alli", U"al"}, {U"anci", U"ance"},
    {U"ator", U"ate"}, {U"enci", U"ence"}, {U"izer", U"ize"},
    {U"bli", U"ble"}, {U"ogi", U"og"}, {U"li", U""},
};

void step2(u32string& w, const Regions& r) {
    const Mapping* best = nullptr;
    for (const Mapping& m : k_step2) {
        if ((!best || m.suffix.size() > best->suffix.size()) && ends_with(w, m.suffix)) {
            best = &m;
        }
    }
    if (!best) return;
    const size_t start = w.size() - best->suffix.size();
    if (start < r.r1) return;
    if (best->suffix == U"ogi") {
        if (start >= 1 && w[start - 1] == U'l') {
            w.erase(start);
            w += best->replacement;
        }
        return;
    }
    if (best->suffix == U"li") {
        if (start >= 1 && valid_li(w[start - 1])) w.erase(start);
        return;
    }
    w.erase(start);
    w += best->replacement;
}

constexpr Mapping k_step3[] = {
    {U"ational", U"ate"}, {U"tional", U"tion"}, {U"alize", U"al"},
    {U"icate", U"ic"}, {U"iciti", U"ic"}, {U"ative", U""},
    {U"ical", U"ic"}, {U"ness", U""}, {U"ful", U""},
};

void step3(u32string& w, const Regions& r) {
    const Mapping* best = nullptr;
    for (const Mapping& m : k_step3) {
        if ((!best || m.suffix.size() > best->suffix.size()) && ends_with(w, m.suffix)) {
            best = &m;
        }
    }
    if (!best) return;
    const size_t start = w.size() - best->suffix.size();
    if (start < r.r1) return;
    if (best->suffix == U"ative") {
        if (start >= r.r2) w.erase(start);
        return;
    }
    w.erase(start);
    w += best->replacement;
}

constexpr u32string_view k_step4[] = {
    U"ement", U"ance", U"ence", U"able", U"ible", U"ment",
    U"ant", U"ate", U"ent", U"ion", U"ism", U"iti", U"ive", U"ize", U"ous",
    U"al", U"er", U"ic",
};

void step4(u32string& w, const Regions& r) {
    u32string_view best;
    for (u32string_view s : k_step4) {
        if (s.size() > best.size() && ends_with(w, s)) best = s;
    }
    if (best.empty()) return;
    const size_t start = w.size() - best.size();
    if (start < r.r2) return;
    if (best == U"ion") {
        if (start >= 1 && (w[start - 1] == U's' || w[start - 1] == U't')) w.erase(start);
        return;
    }
    w.erase(start);
}

void step5(u32string& w, const Regions& r) {
    const size_t n = w.size();
    if (n >= 1 && w[n - 1] == U'e') {
        const size_t pos = n - 1;
        if (pos >= r.r2) {
            w.pop_back();
        } else if (pos >= r.r1) {
            u32string head = w.substr(0, pos);
            if (!ends_short_syllable(head)) w.pop_back();
        }
        return;
    }
    if (n >= 2 && w[n - 1] == U'l' && w[n - 2] == U'l' && n - 1 >= r.r2) {
        w.pop_back();
    }
}

void postlude(u32string& w) {
    for (auto& c : w) {
        if (c == U'Y') c = U'y';
    }
}

} // namespace

std::string english(std::string_view word) {
    u32string w = util::utf8_decode(word);
    for (auto& c : w) c = util::lower(c);

    for (const auto& [from, to] : k_exceptions) {
        if (w == from) return util::utf8_encode(u32string(to));
    }
    if (w.size() <= 2) return util::utf8_encode(w);

    prelude(w);
    const Regions r = mark_regions(w);
    step0(w);
    step1a(w);
    for (u32string_view stop : k_stop_after_1a) {
        if (w == stop) {
            postlude(w);
            return util::utf8_encode(w);
        }
    }
    step1b(w, r);
    step1c(w);
    step2(w, r);
    step3(w, r);
    step4(w, r);
    step5(w, r);
    postlude(w);
    return util::utf8_encode(w);
}

} // namespace sbs::textprep::snowball
