#ifndef LEXTOPIC_HTML_RECORD_H_
#define LEXTOPIC_HTML_RECORD_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lextopic/corpus.h"

namespace lextopic {

// Saved detail pages mark each region with a class on its element:
//
//   <article data-record-id="...">          id
//     <h1 class="law-title">                title
//     <div class="law-lead">                lead (optional)
//     <div class="law-content">             content
//     <ul class="law-tags"><li>...</li>     tags
//     <ul class="law-classes"><li>...</li>  classes
//     <span class="law-type">               law type
//     <span class="law-category">           category
//     <span class="law-date">               date
//
// Throws Error(StructureMismatch, "<region>") when a required region is
// absent, plus the usual corpus errors for bad type or date text.
LawRecord parse_html_record(std::string_view html);

// Replaces every tag with a space, decodes character references, collapses
// whitespace runs and trims. Script and style bodies are dropped.
std::string strip_markup(std::string_view html);

// Inner HTML of the first element whose class list contains `class_name`.
std::optional<std::string_view> find_by_class(std::string_view html,
                                              std::string_view class_name);

}  // namespace lextopic

#endif  // LEXTOPIC_HTML_RECORD_H_
