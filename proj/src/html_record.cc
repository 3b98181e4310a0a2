#include "lextopic/html_record.h"

#include <cctype>
#include <cstdlib>

#include "lextopic/error.h"
#include "lextopic/utf8.h"

namespace lextopic {
namespace {

struct Tag {
  std::string name;  // lowercase, without '/'
  bool closing = false;
  bool self_closing = false;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::size_t begin = 0;  // offset of '<'
  std::size_t end = 0;    // offset one past '>'
};

bool is_void_element(std::string_view name) {
  static constexpr std::string_view kVoid[] = {
      "area", "base", "br", "col", "embed", "hr", "img", "input",
      "link", "meta", "param", "source", "track", "wbr"};
  for (auto v : kVoid) {
    if (name == v) return true;
  }
  return false;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Parses the tag starting at html[pos] == '<'. Comments, doctypes and
// processing instructions come back with an empty name.
Tag read_tag(std::string_view html, std::size_t pos) {
  Tag tag;
  tag.begin = pos;
  if (html.substr(pos, 4) == "<!--") {
    const std::size_t close = html.find("-->", pos + 4);
    tag.end = close == std::string_view::npos ? html.size() : close + 3;
    return tag;
  }
  std::size_t i = pos + 1;
  if (i < html.size() && (html[i] == '!' || html[i] == '?')) {
    const std::size_t close = html.find('>', i);
    tag.end = close == std::string_view::npos ? html.size() : close + 1;
    return tag;
  }
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < html.size() && (std::isalnum(static_cast<unsigned char>(html[i])) ||
                             html[i] == '-' || html[i] == ':')) {
    ++i;
  }
  tag.name = lower(html.substr(name_start, i - name_start));
  while (i < html.size() && html[i] != '>') {
    if (std::isspace(static_cast<unsigned char>(html[i]))) {
      ++i;
      continue;
    }
    if (html[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    const std::size_t key_start = i;
    while (i < html.size() && html[i] != '=' && html[i] != '>' && html[i] != '/' &&
           !std::isspace(static_cast<unsigned char>(html[i]))) {
      ++i;
    }
    std::string key = lower(html.substr(key_start, i - key_start));
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        const char quote = html[i++];
        const std::size_t close = html.find(quote, i);
        const std::size_t stop = close == std::string_view::npos ? html.size() : close;
        value = std::string(html.substr(i, stop - i));
        i = stop == html.size() ? stop : stop + 1;
      } else {
        const std::size_t value_start = i;
        while (i < html.size() && html[i] != '>' &&
               !std::isspace(static_cast<unsigned char>(html[i]))) {
          ++i;
        }
        value = std::string(html.substr(value_start, i - value_start));
      }
    }
    if (!key.empty()) tag.attributes.emplace_back(std::move(key), std::move(value));
  }
  tag.end = i < html.size() ? i + 1 : html.size();
  return tag;
}

std::string_view attribute(const Tag& tag, std::string_view key) {
  for (const auto& [k, v] : tag.attributes) {
    if (k == key) return v;
  }
  return {};
}

bool has_class(const Tag& tag, std::string_view class_name) {
  const std::string_view classes = attribute(tag, "class");
  std::size_t i = 0;
  while (i < classes.size()) {
    while (i < classes.size() && std::isspace(static_cast<unsigned char>(classes[i]))) ++i;
    std::size_t j = i;
    while (j < classes.size() && !std::isspace(static_cast<unsigned char>(classes[j]))) ++j;
    if (classes.substr(i, j - i) == class_name) return true;
    i = j;
  }
  return false;
}

// Offset one past the end of the element whose start tag is `open`, and the
// offset of its closing tag. Unclosed elements run to end of input.
std::pair<std::size_t, std::size_t> element_extent(std::string_view html,
                                                   const Tag& open) {
  if (open.self_closing || is_void_element(open.name)) return {open.end, open.end};
  int depth = 1;
  std::size_t pos = open.end;
  while ((pos = html.find('<', pos)) != std::string_view::npos) {
    const Tag tag = read_tag(html, pos);
    if (tag.name == open.name) {
      if (tag.closing) {
        if (--depth == 0) return {tag.begin, tag.end};
      } else if (!tag.self_closing) {
        ++depth;
      }
    }
    pos = tag.end;
  }
  return {html.size(), html.size()};
}

template <typename Pred>
std::optional<std::pair<Tag, std::string_view>> find_element(std::string_view html,
                                                             Pred pred) {
  std::size_t pos = 0;
  while ((pos = html.find('<', pos)) != std::string_view::npos) {
    Tag tag = read_tag(html, pos);
    if (!tag.name.empty() && !tag.closing && pred(tag)) {
      const auto [inner_end, _] = element_extent(html, tag);
      const std::string_view inner = html.substr(tag.end, inner_end - tag.end);
      return std::make_pair(std::move(tag), inner);
    }
    pos = tag.end;
  }
  return std::nullopt;
}

void append_entity(std::string& out, std::string_view entity) {
  if (!entity.empty() && entity[0] == '#') {
    const bool hex = entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X');
    const std::string digits(entity.substr(hex ? 2 : 1));
    char* end = nullptr;
    const unsigned long cp = std::strtoul(digits.c_str(), &end, hex ? 16 : 10);
    if (!digits.empty() && *end == '\0' && cp > 0 && cp <= 0x10FFFF) {
      utf8::append(out, static_cast<char32_t>(cp));
      return;
    }
  }
  static constexpr std::pair<std::string_view, char32_t> kNamed[] = {
      {"amp", U'&'}, {"lt", U'<'}, {"gt", U'>'}, {"quot", U'"'},
      {"apos", U'\''}, {"nbsp", 0x00A0}, {"zwnj", 0x200C}, {"laquo", 0x00AB},
      {"raquo", 0x00BB}};
  for (const auto& [name, cp] : kNamed) {
    if (entity == name) {
      utf8::append(out, cp);
      return;
    }
  }
  out.push_back('&');
  out.append(entity);
  out.push_back(';');
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    utf8::append(out, cp);
  }
  return out;
}

std::vector<std::string> list_items(std::string_view inner) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  while (true) {
    const auto li = find_element(inner.substr(pos),
                                 [](const Tag& t) { return t.name == "li"; });
    if (!li) break;
    std::string text = strip_markup(li->second);
    if (!text.empty()) items.push_back(std::move(text));
    const std::size_t inner_offset =
        static_cast<std::size_t>(li->second.data() - inner.data());
    pos = inner_offset + li->second.size();
  }
  return items;
}

[[noreturn]] void mismatch(std::string_view region) {
  throw Error(ErrorCode::kStructureMismatch, "corpus", std::string(region));
}

std::string_view required_region(std::string_view html, std::string_view region) {
  const auto found = find_by_class(html, "law-" + std::string(region));
  if (!found) mismatch(region);
  return *found;
}

}  // namespace

std::string strip_markup(std::string_view html) {
  std::string text;
  std::size_t i = 0;
  while (i < html.size()) {
    const char c = html[i];
    if (c == '<') {
      const Tag tag = read_tag(html, i);
      text.push_back(' ');
      i = tag.end;
      if (!tag.closing && (tag.name == "script" || tag.name == "style")) {
        i = element_extent(html, tag).second;
      }
    } else if (c == '&') {
      const std::size_t semi = html.find(';', i);
      if (semi != std::string_view::npos && semi - i <= 10) {
        append_entity(text, html.substr(i + 1, semi - i - 1));
        i = semi + 1;
      } else {
        text.push_back('&');
        ++i;
      }
    } else {
      text.push_back(c);
      ++i;
    }
  }
  return collapse_whitespace(text);
}

std::optional<std::string_view> find_by_class(std::string_view html,
                                              std::string_view class_name) {
  const auto found =
      find_element(html, [&](const Tag& t) { return has_class(t, class_name); });
  if (!found) return std::nullopt;
  return found->second;
}

LawRecord parse_html_record(std::string_view html) {
  LawRecord r;
  const auto root = find_element(
      html, [](const Tag& t) { return !attribute(t, "data-record-id").empty(); });
  if (!root) mismatch("id");
  r.id = std::string(attribute(root->first, "data-record-id"));

  r.title = strip_markup(required_region(html, "title"));
  if (r.title.empty()) mismatch("title");
  r.content = strip_markup(required_region(html, "content"));
  if (const auto lead = find_by_class(html, "law-lead")) r.lead = strip_markup(*lead);
  r.tags = list_items(required_region(html, "tags"));
  r.classes = list_items(required_region(html, "classes"));
  r.law_type = parse_law_type(strip_markup(required_region(html, "type")));
  r.category = strip_markup(required_region(html, "category"));
  r.date = parse_record_date(strip_markup(required_region(html, "date")));
  return r;
}

}  // namespace lextopic
