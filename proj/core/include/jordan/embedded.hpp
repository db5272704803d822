#pragma once

#include <string_view>

// JSON documents compiled into the library.
namespace jordan::embedded {

std::string_view catalog_json();
// Empty view for unknown ids.
std::string_view scheme_json(std::string_view id);

}  // namespace jordan::embedded
