#pragma once

#include <string>
#include <string_view>

namespace sbs::textprep {

// Snowball stemming for the two corpus languages. Input is expected to be
// lowercase UTF-8; output is the stemmed form. Tokens joined with '_' (merged
// collocations) are stemmed component by component.
std::string stem(std::string_view token, const std::string& language);

namespace snowball {
std::string italian(std::string_view word);
std::string english(std::string_view word);
} // namespace snowball

} // namespace sbs::textprep
