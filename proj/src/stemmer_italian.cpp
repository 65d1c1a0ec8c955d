#include "sbs/stemmer.hpp"

#include "sbs/util.hpp"

#include <string>

// Italian snowball stemmer, ported from the published algorithm description.
// Works on code points so the accented vowels keep their identity.

namespace sbs::textprep::snowball {

namespace {

using std::u32string;
using std::u32string_view;

bool vowel(char32_t c) {
    switch (c) {
        case U'a': case U'e': case U'i': case U'o': case U'u':
        case U'à': case U'è': case U'ì': case U'ò': case U'ù':
            return true;
        default:
            return false;
    }
}

struct Regions {
    size_t rv;
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
    const size_t n = w.size();
    Regions r{n, n, n};
    if (n >= 2) {
        if (!vowel(w[1])) {
            size_t k = 2;
            while (k < n && !vowel(w[k])) ++k;
            r.rv = (k < n) ? k + 1 : n;
        } else if (vowel(w[0])) {
            size_t k = 2;
            while (k < n && vowel(w[k])) ++k;
            r.rv = (k < n) ? k + 1 : n;
        } else {
            r.rv = (n >= 3) ? 3 : n;
        }
    }
    r.r1 = after_vowel_consonant(w, 0);
    r.r2 = after_vowel_consonant(w, r.r1);
    return r;
}

bool ends_with(const u32string& w, u32string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Deletes suffix when it sits entirely at or past the region start.
bool erase_suffix_in(u32string& w, u32string_view suffix, size_t region) {
    if (!ends_with(w, suffix)) return false;
    const size_t start = w.size() - suffix.size();
    if (start < region) return false;
    w.erase(start);
    return true;
}

void prelude(u32string& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
            case U'á': w[i] = U'à'; break;
            case U'é': w[i] = U'è'; break;
            case U'í': w[i] = U'ì'; break;
            case U'ó': w[i] = U'ò'; break;
            case U'ú': w[i] = U'ù'; break;
            case U'q':
                if (i + 1 < w.size() && w[i + 1] == U'u') {
                    w[i + 1] = U'U';
                    ++i;
                }
                break;
            default: break;
        }
    }
    // u or i between vowels becomes a marker so it is treated as a consonant.
    size_t p = 0;
    while (p + 2 < w.size()) {
        if (vowel(w[p]) && (w[p + 1] == U'u' || w[p + 1] == U'i') && vowel(w[p + 2])) {
            w[p + 1] = (w[p + 1] == U'u') ? U'U' : U'I';
            p += 3;
        } else {
            ++p;
        }
    }
}

void postlude(u32string& w) {
    for (auto& c : w) {
        if (c == U'U') c = U'u';
        else if (c == U'I') c = U'i';
    }
}

constexpr u32string_view k_pronouns[] = {
    U"gliela", U"gliele", U"glieli", U"glielo", U"gliene",
    U"sene", U"mela", U"mele", U"meli", U"melo", U"mene",
    U"tela", U"tele", U"teli", U"telo", U"tene",
    U"cela", U"cele", U"celi", U"celo", U"cene",
    U"vela", U"vele", U"veli", U"velo", U"vene",
    U"gli", U"ci", U"la", U"le", U"li", U"lo", U"mi", U"ne", U"si", U"ti", U"vi",
};

void attached_pronoun(u32string& w, const Regions& r) {
    size_t plen = 0;
    for (u32string_view p : k_pronouns) {
        if (p.size() > plen && ends_with(w, p) && w.size() - p.size() >= r.rv) {
            plen = p.size();
        }
    }
    if (plen == 0) return;
    const size_t base = w.size() - plen;
    const auto preceded_by = [&](u32string_view m) {
        return base >= m.size() && base - m.size() >= r.rv &&
               w.compare(base - m.size(), m.size(), m) == 0;
    };
    if (preceded_by(U"ando") || preceded_by(U"endo")) {
        w.erase(base);
    } else if (preceded_by(U"ar") || preceded_by(U"er") || preceded_by(U"ir")) {
        w.erase(base);
        w.push_back(U'e');
    }
}

enum class Action {
    delete_r2,
    azione,   // delete in R2, then a preceding ic in R2
    logia,    // -> log in R2
    uzione,   // -> u in R2
    enza,     // -> ente in R2
    amento,   // delete in RV
    amente,   // delete in R1, then iv(at) or os/ic/abil in R2
    ita,      // delete in R2, then abil/ic/iv in R2
    ivo,      // delete in R2, then at(ic) in R2
};

struct Entry {
    u32string_view suffix;
    Action action;
};

constexpr Entry k_step1[] = {
    {U"anza", Action::delete_r2}, {U"anze", Action::delete_r2},
    {U"ico", Action::delete_r2}, {U"ici", Action::delete_r2},
    {U"ica", Action::delete_r2}, {U"ice", Action::delete_r2},
    {U"iche", Action::delete_r2}, {U"ichi", Action::delete_r2},
    {U"ismo", Action::delete_r2}, {U"ismi", Action::delete_r2},
    {U"abile", Action::delete_r2}, {U"abili", Action::delete_r2},
    {U"ibile", Action::delete_r2}, {U"ibili", Action::delete_r2},
    {U"ista", Action::delete_r2}, {U"iste", Action::delete_r2},
    {U"isti", Action::delete_r2}, {U"istà", Action::delete_r2},
    {U"istè", Action::delete_r2}, {U"istì", Action::delete_r2},
    {U"oso", Action::delete_r2}, {U"osi", Action::delete_r2},
    {U"osa", Action::delete_r2}, {U"ose", Action::delete_r2},
    {U"mente", Action::delete_r2},
    {U"atrice", Action::delete_r2}, {U"atrici", Action::delete_r2},
    {U"ante", Action::delete_r2}, {U"anti", Action::delete_r2},
    {U"azione", Action::azione}, {U"azioni", Action::azione},
    {U"atore", Action::azione}, {U"atori", Action::azione},
    {U"logia", Action::logia}, {U"logie", Action::logia},
    {U"uzione", Action::uzione}, {U"uzioni", Action::uzione},
    {U"usione", Action::uzione}, {U"usioni", Action::uzione},
    {U"enza", Action::enza}, {U"enze", Action::enza},
    {U"amento", Action::amento}, {U"amenti", Action::amento},
    {U"imento", Action::amento}, {U"imenti", Action::amento},
    {U"amente", Action::amente},
    {U"ità", Action::ita},
    {U"ivo", Action::ivo}, {U"ivi", Action::ivo},
    {U"iva", Action::ivo}, {U"ive", Action::ivo},
};

bool standard_suffix(u32string& w, const Regions& r) {
    const Entry* best = nullptr;
    for (const Entry& e : k_step1) {
        if ((!best || e.suffix.size() > best->suffix.size()) && ends_with(w, e.suffix)) {
            best = &e;
        }
    }
    if (!best) return false;
    const size_t start = w.size() - best->suffix.size();
    switch (best->action) {
        case Action::delete_r2:
            if (start < r.r2) return false;
            w.erase(start);
            return true;
        case Action::azione:
            if (start < r.r2) return false;
            w.erase(start);
            erase_suffix_in(w, U"ic", r.r2);
            return true;
        case Action::logia:
            if (start < r.r2) return false;
            w.erase(start);
            w += U"log";
            return true;
        case Action::uzione:
            if (start < r.r2) return false;
            w.erase(start);
            w.push_back(U'u');
            return true;
        case Action::enza:
            if (start < r.r2) return false;
            w.erase(start);
            w += U"ente";
            return true;
        case Action::amento:
            if (start < r.rv) return false;
            w.erase(start);
            return true;
        case Action::amente:
            if (start < r.r1) return false;
            w.erase(start);
            if (erase_suffix_in(w, U"iv", r.r2)) {
                erase_suffix_in(w, U"at", r.r2);
            } else if (!erase_suffix_in(w, U"abil", r.r2)) {
                if (!erase_suffix_in(w, U"os", r.r2)) erase_suffix_in(w, U"ic", r.r2);
            }
            return true;
        case Action::ita:
            if (start < r.r2) return false;
            w.erase(start);
            if (!erase_suffix_in(w, U"abil", r.r2)) {
                if (!erase_suffix_in(w, U"ic", r.r2)) erase_suffix_in(w, U"iv", r.r2);
            }
            return true;
        case Action::ivo:
            if (start < r.r2) return false;
            w.erase(start);
            if (erase_suffix_in(w, U"at", r.r2)) erase_suffix_in(w, U"ic", r.r2);
            return true;
    }
    return false;
}

constexpr u32string_view k_verb_suffixes[] = {
    U"ammo", U"ando", U"ano", U"are", U"arono", U"asse", U"assero", U"assi",
    U"assimo", U"ata", U"ate", U"ati", U"ato", U"ava", U"avamo", U"avano",
    U"avate", U"avi", U"avo", U"emmo", U"enda", U"ende", U"endi", U"endo",
    U"erà", U"erai", U"eranno", U"ere", U"erebbe", U"erebbero", U"erei",
    U"eremmo", U"eremo", U"ereste", U"eresti", U"erete", U"erò", U"erono",
    U"essero", U"ete", U"eva", U"evamo", U"evano", U"evate", U"evi", U"evo",
    U"Iamo", U"iamo", U"immo", U"irà", U"irai", U"iranno", U"ire", U"irebbe",
    U"irebbero", U"irei", U"iremmo", U"iremo", U"ireste", U"iresti", U"irete",
    U"irò", U"irono", U"isca", U"iscano", U"isce", U"isci", U"isco",
    U"iscono", U"issero", U"ita", U"ite", U"iti", U"ito", U"iva", U"ivamo",
    U"ivano", U"ivate", U"ivi", U"ivo", U"ono", U"uta", U"ute", U"uti",
    U"uto", U"ar", U"ir",
};

bool verb_suffix(u32string& w, const Regions& r) {
    size_t best = 0;
    for (u32string_view s : k_verb_suffixes) {
        if (s.size() > best && ends_with(w, s) && w.size() - s.size() >= r.rv) {
            best = s.size();
        }
    }
    if (best == 0) return false;
    w.erase(w.size() - best);
    return true;
}

void vowel_suffix(u32string& w, const Regions& r) {
    if (!w.empty()) {
        const char32_t c = w.back();
        const bool deletable =
            c == U'a' || c == U'e' || c == U'i' || c == U'o' ||
            c == U'à' || c == U'è' || c == U'ì' || c == U'ò';
        if (deletable && w.size() - 1 >= r.rv) {
            w.pop_back();
            if (!w.empty() && w.back() == U'i' && w.size() - 1 >= r.rv) w.pop_back();
        }
    }
    if (w.size() >= 2 && w.back() == U'h') {
        const char32_t prev = w[w.size() - 2];
        if ((prev == U'c' || prev == U'g') && w.size() - 2 >= r.rv) w.pop_back();
    }
}

} // namespace

std::string italian(std::string_view word) {
    u32string w = util::utf8_decode(word);
    for (auto& c : w) c = util::lower(c);
    prelude(w);
    const Regions r = mark_regions(w);
    attached_pronoun(w, r);
    if (!standard_suffix(w, r)) verb_suffix(w, r);
    vowel_suffix(w, r);
    postlude(w);
    return util::utf8_encode(w);
}

} // namespace sbs::textprep::snowball
