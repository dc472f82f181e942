#include "plum/paraphrase.hpp"

namespace plum {

TableParaphraseProvider::TableParaphraseProvider(
    const std::map<std::string, std::vector<std::string>>& entries) {
    for (const auto& [phrase, alts] : entries) add_entry(phrase, alts);
}

void TableParaphraseProvider::add_entry(std::string_view phrase, const std::vector<std::string>& alts) {
    Segment key = make_segment(phrase);
    if (key.empty()) return;
    std::vector<Segment>& row = table_[render_prompt(Prompt{{key}})];
    for (const std::string& alt : alts) {
        Segment seg = make_segment(alt);
        if (!seg.empty()) row.push_back(std::move(seg));
    }
}

std::vector<Segment> TableParaphraseProvider::alternatives(const Segment& s) {
    auto it = table_.find(render_prompt(Prompt{{s}}));
    if (it == table_.end()) return {};
    return it->second;
}

}  // namespace plum
