#pragma once

#include <cctype>
#include <string>
#include <vector>

namespace testsupport {

// Minimal XML well-formedness scan, sufficient for the SVG the tool
// emits: balanced tags, double-quoted attribute values, one root element.
inline bool xml_well_formed(const std::string& doc,
                            std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == ':' ||
           c == '-' || c == '_' || c == '.';
  };
  std::vector<std::string> stack;
  bool root_done = false;
  std::size_t elements = 0;
  std::size_t i = 0;
  const std::size_t n = doc.size();
  while (i < n) {
    char c = doc[i];
    if (c != '<') {
      if (c == '>') return fail("stray '>' outside a tag");
      ++i;
      continue;
    }
    ++i;
    if (i < n && doc[i] == '?') {
      auto end = doc.find("?>", i);
      if (end == std::string::npos) return fail("unterminated declaration");
      i = end + 2;
      continue;
    }
    if (doc.compare(i, 3, "!--") == 0) {
      auto end = doc.find("-->", i + 3);
      if (end == std::string::npos) return fail("unterminated comment");
      i = end + 3;
      continue;
    }
    bool closing = false;
    if (i < n && doc[i] == '/') {
      closing = true;
      ++i;
    }
    std::string name;
    while (i < n && name_char(doc[i])) name += doc[i++];
    if (name.empty()) return fail("empty tag name");
    if (closing) {
      while (i < n && std::isspace(static_cast<unsigned char>(doc[i]))) ++i;
      if (i >= n || doc[i] != '>') return fail("malformed closing tag " + name);
      ++i;
      if (stack.empty() || stack.back() != name)
        return fail("mismatched closing tag " + name);
      stack.pop_back();
      if (stack.empty()) root_done = true;
      continue;
    }
    bool self_closed = false;
    while (i < n) {
      while (i < n && std::isspace(static_cast<unsigned char>(doc[i]))) ++i;
      if (i >= n) return fail("unterminated tag " + name);
      if (doc[i] == '>') {
        ++i;
        break;
      }
      if (doc[i] == '/') {
        ++i;
        if (i >= n || doc[i] != '>')
          return fail("malformed self-closing tag " + name);
        ++i;
        self_closed = true;
        break;
      }
      std::string attr;
      while (i < n && name_char(doc[i])) attr += doc[i++];
      if (attr.empty()) return fail("bad attribute character in " + name);
      if (i >= n || doc[i] != '=')
        return fail("attribute " + attr + " without value in " + name);
      ++i;
      if (i >= n || doc[i] != '"')
        return fail("unquoted value for " + attr + " in " + name);
      ++i;
      while (i < n && doc[i] != '"' && doc[i] != '<') ++i;
      if (i >= n || doc[i] != '"')
        return fail("unterminated value for " + attr + " in " + name);
      ++i;
    }
    if (stack.empty() && root_done)
      return fail("content after the root element: " + name);
    ++elements;
    if (!self_closed) {
      stack.push_back(name);
    } else if (stack.empty()) {
      root_done = true;
    }
  }
  if (!stack.empty()) return fail("unclosed tag " + stack.back());
  if (elements == 0) return fail("no elements");
  return true;
}

// Number of occurrences of "<name" followed by whitespace or '>' .
inline std::size_t count_elements(const std::string& doc,
                                  const std::string& name) {
  std::size_t count = 0;
  const std::string needle = "<" + name;
  std::size_t pos = doc.find(needle);
  while (pos != std::string::npos) {
    char after = pos + needle.size() < doc.size() ? doc[pos + needle.size()]
                                                  : '\0';
    if (after == ' ' || after == '>' || after == '\t' || after == '\n' ||
        after == '/')
      ++count;
    pos = doc.find(needle, pos + 1);
  }
  return count;
}

}  // namespace testsupport
