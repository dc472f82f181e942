#include "plum/prompt.hpp"

#include <algorithm>
#include <cctype>

namespace plum {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > start) out.emplace_back(text.substr(start, i - start));
    }
    return out;
}

}  // namespace

std::string render_prompt(const Prompt& p) {
    std::string out;
    for (const Segment& seg : p.segments) {
        for (const Token& tok : seg) {
            if (!out.empty()) out += ' ';
            out += tok;
        }
    }
    return out;
}

std::size_t token_count(const Prompt& p) {
    std::size_t n = 0;
    for (const Segment& seg : p.segments) n += seg.size();
    return n;
}

Segment make_segment(std::string_view text) {
    return tokenize(text);
}

Prompt segment_prompt(std::string_view text, const SegmenterConfig& cfg) {
    Prompt p;
    switch (cfg.mode) {
    case SegmentMode::whitespace: {
        std::vector<Token> toks = tokenize(text);
        std::size_t per = cfg.tokens_per_segment < 1 ? 1 : static_cast<std::size_t>(cfg.tokens_per_segment);
        for (std::size_t i = 0; i < toks.size(); i += per) {
            std::size_t end = std::min(i + per, toks.size());
            p.segments.emplace_back(toks.begin() + static_cast<std::ptrdiff_t>(i),
                                    toks.begin() + static_cast<std::ptrdiff_t>(end));
        }
        break;
    }
    case SegmentMode::delimiter: {
        std::string_view rest = text;
        const std::string& d = cfg.delimiter;
        while (true) {
            std::size_t pos = d.empty() ? std::string_view::npos : rest.find(d);
            std::string_view piece = pos == std::string_view::npos ? rest : rest.substr(0, pos);
            Segment seg = tokenize(piece);
            if (!seg.empty()) p.segments.push_back(std::move(seg));
            if (pos == std::string_view::npos) break;
            rest = rest.substr(pos + d.size());
        }
        break;
    }
    case SegmentMode::fixed_width: {
        std::vector<Token> toks = tokenize(text);
        if (toks.empty()) break;
        std::size_t L = toks.size();
        std::size_t k = cfg.tokens_per_segment < 1 ? 1 : static_cast<std::size_t>(cfg.tokens_per_segment);
        k = std::min(k, L);
        // balanced contiguous partition into k runs via ceiling bounds
        for (std::size_t j = 1; j <= k; ++j) {
            std::size_t start = (static_cast<std::size_t>(j - 1) * L + k - 1) / k;
            std::size_t end = (j * L + k - 1) / k;  // exclusive
            p.segments.emplace_back(toks.begin() + static_cast<std::ptrdiff_t>(start),
                                    toks.begin() + static_cast<std::ptrdiff_t>(end));
        }
        break;
    }
    }
    return p;
}

bool prompt_valid(const Prompt& p) {
    for (const Segment& seg : p.segments) {
        if (seg.empty()) return false;
        for (const Token& tok : seg) {
            if (tok.empty()) return false;
            if (std::any_of(tok.begin(), tok.end(), is_space)) return false;
        }
    }
    return true;
}

}  // namespace plum
