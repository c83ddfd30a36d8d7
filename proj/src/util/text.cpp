#include "clinsynth/util/text.hpp"

#include <algorithm>
#include <cctype>

namespace clinsynth::util {

namespace {

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Returns the byte length of a Unicode space at s[i], or 0 if none.
std::size_t space_len_at(std::string_view s, std::size_t i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (is_ascii_space(c)) {
        return 1;
    }
    // U+00A0 NBSP: C2 A0
    if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xA0) {
        return 2;
    }
    if (c == 0xE2 && i + 2 < s.size()) {
        const unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
        const unsigned char b2 = static_cast<unsigned char>(s[i + 2]);
        // U+2000..U+200A (spaces), U+2028/U+2029 (line/para separators)
        if (b1 == 0x80 && ((b2 >= 0x80 && b2 <= 0x8A) || b2 == 0xA8 || b2 == 0xA9)) {
            return 3;
        }
        // U+205F medium mathematical space
        if (b1 == 0x81 && b2 == 0x9F) {
            return 3;
        }
    }
    // U+3000 ideographic space: E3 80 80
    if (c == 0xE3 && i + 2 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0x80 &&
        static_cast<unsigned char>(s[i + 2]) == 0x80) {
        return 3;
    }
    return 0;
}

}  // namespace

std::string trim(std::string_view s) {
    std::size_t begin = 0;
    while (begin < s.size()) {
        const std::size_t n = space_len_at(s, begin);
        if (n == 0) {
            break;
        }
        begin += n;
    }
    std::size_t end = s.size();
    while (end > begin) {
        // Walk back one byte at a time; multi-byte spaces end in a byte that
        // never starts an ASCII token, so probing each suffix start is safe.
        bool trimmed = false;
        for (std::size_t k = 1; k <= 3 && k <= end - begin; ++k) {
            const std::size_t n = space_len_at(s, end - k);
            if (n == k) {
                end -= k;
                trimmed = true;
                break;
            }
        }
        if (!trimmed) {
            break;
        }
    }
    return std::string(s.substr(begin, end - begin));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t n = space_len_at(s, i);
        if (n > 0) {
            i += n;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && space_len_at(s, j) == 0) {
            ++j;
        }
        out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t word_count(std::string_view s) {
    return split_whitespace(s).size();
}

std::string normalize_for_match(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t n = space_len_at(s, i);
        if (n > 0) {
            pending_space = true;
            i += n;
            continue;
        }
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80 && !std::isalnum(c)) {
            // ASCII punctuation separates tokens rather than vanishing inside them.
            pending_space = true;
            ++i;
            continue;
        }
        if (pending_space && !out.empty()) {
            out.push_back(' ');
        }
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(c)));
        ++i;
    }
    return out;
}

bool contains_phrase(std::string_view text, std::string_view phrase) {
    const std::string t = normalize_for_match(text);
    const std::string p = normalize_for_match(phrase);
    if (p.empty()) {
        return false;
    }
    std::size_t pos = 0;
    while ((pos = t.find(p, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || t[pos - 1] == ' ';
        const std::size_t end = pos + p.size();
        const bool right_ok = end == t.size() || t[end] == ' ';
        if (left_ok && right_ok) {
            return true;
        }
        ++pos;
    }
    return false;
}

std::string replace_all(std::string_view s, std::string_view from, std::string_view to) {
    if (from.empty()) {
        return std::string(s);
    }
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (true) {
        const std::size_t hit = s.find(from, pos);
        if (hit == std::string_view::npos) {
            out.append(s.substr(pos));
            return out;
        }
        out.append(s.substr(pos, hit - pos));
        out.append(to);
        pos = hit + from.size();
    }
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out.append(sep);
        }
        out.append(parts[i]);
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '\n') {
            std::string_view line = s.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            out.emplace_back(line);
            start = i + 1;
        }
    }
    if (!out.empty() && out.back().empty() && !s.empty() && s.back() == '\n') {
        out.pop_back();
    }
    return out;
}

}  // namespace clinsynth::util
