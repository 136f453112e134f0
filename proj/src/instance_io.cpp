#include "spa/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "spa/errors.hpp"

namespace spa {

namespace {

struct Line {
  int number = 0;  // 1-based position in the source text
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

// Splits into data lines. Lines that are blank after comment stripping are
// kept only when they contained no comment: a pure-comment line is skipped, a
// genuinely blank line is data (an empty preference list).
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    const std::size_t hash = raw.find('#');
    const bool had_comment = hash != std::string_view::npos;
    if (had_comment) raw = raw.substr(0, hash);

    Line line;
    line.number = number;
    std::string token;
    for (char c : raw) {
      if (c == '(' || c == ')') {
        if (!token.empty()) line.tokens.push_back(std::move(token));
        token.clear();
        line.tokens.push_back(std::string(1, c));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) line.tokens.push_back(std::move(token));
        token.clear();
      } else {
        token.push_back(c);
      }
    }
    if (!token.empty()) line.tokens.push_back(std::move(token));

    if (line.tokens.empty() && had_comment) continue;  // comment-only line
    if (line.tokens.empty() && raw.empty() && eol == std::string_view::npos) {
      break;  // trailing newline artifact, not a data line
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& token, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(line.number, std::string("expected ") + what + ", got '" + token + "'");
  }
  if (used != token.size()) {
    fail(line.number, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace

SpaInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t cursor = 0;

  auto next_line = [&](const char* what) -> const Line& {
    if (cursor >= lines.size()) {
      throw ParseError(std::string("unexpected end of file, expected ") + what);
    }
    return lines[cursor++];
  };

  const Line& header = next_line("header 'n1 n2 n3'");
  if (header.tokens.size() != 3) {
    fail(header.number, "expected header 'n1 n2 n3'");
  }
  const int n1 = parse_int(header, header.tokens[0], "student count");
  const int n2 = parse_int(header, header.tokens[1], "project count");
  const int n3 = parse_int(header, header.tokens[2], "lecturer count");
  if (n1 < 0 || n2 < 0 || n3 < 0) {
    fail(header.number, "counts must be non-negative");
  }

  std::vector<Student> students;
  students.reserve(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) {
    const Line& line = next_line("a student preference line");
    Student s;
    s.id = i;
    std::vector<int>* open_group = nullptr;
    for (const auto& token : line.tokens) {
      if (token == "(") {
        if (open_group != nullptr) fail(line.number, "nested '('");
        s.pref_groups.emplace_back();
        open_group = &s.pref_groups.back();
      } else if (token == ")") {
        if (open_group == nullptr) fail(line.number, "')' without '('");
        if (open_group->empty()) fail(line.number, "empty tie group");
        open_group = nullptr;
      } else {
        const int p = parse_int(line, token, "project id");
        if (p < 1) fail(line.number, "project ids are 1-based");
        if (open_group != nullptr) {
          open_group->push_back(p - 1);
        } else {
          s.pref_groups.push_back({p - 1});
        }
      }
    }
    if (open_group != nullptr) fail(line.number, "unclosed '('");
    students.push_back(std::move(s));
  }

  std::vector<Project> projects;
  projects.reserve(static_cast<std::size_t>(n2));
  for (int j = 0; j < n2; ++j) {
    const Line& line = next_line("a project line 'capacity lecturer'");
    if (line.tokens.size() != 2) {
      fail(line.number, "expected 'capacity lecturer_id'");
    }
    Project p;
    p.id = j;
    p.capacity = parse_int(line, line.tokens[0], "capacity");
    p.lecturer = parse_int(line, line.tokens[1], "lecturer id") - 1;
    projects.push_back(p);
  }

  std::vector<Lecturer> lecturers;
  lecturers.reserve(static_cast<std::size_t>(n3));
  for (int k = 0; k < n3; ++k) {
    const Line& line = next_line("a lecturer line 'upper lower'");
    if (line.tokens.size() != 2) {
      fail(line.number, "expected 'upper_quota lower_quota'");
    }
    Lecturer l;
    l.id = k;
    l.upper_quota = parse_int(line, line.tokens[0], "upper quota");
    l.lower_quota = parse_int(line, line.tokens[1], "lower quota");
    lecturers.push_back(l);
  }

  while (cursor < lines.size()) {
    if (!lines[cursor].tokens.empty()) {
      fail(lines[cursor].number, "unexpected trailing content");
    }
    ++cursor;
  }

  return SpaInstance(std::move(students), std::move(projects),
                     std::move(lecturers));
}

std::string write_instance(const SpaInstance& instance) {
  std::ostringstream out;
  out << instance.student_count() << ' ' << instance.project_count() << ' '
      << instance.lecturer_count() << '\n';
  for (const auto& s : instance.students()) {
    bool first = true;
    for (const auto& group : s.pref_groups) {
      if (!first) out << ' ';
      first = false;
      if (group.size() == 1) {
        out << group.front() + 1;
      } else {
        out << '(';
        for (std::size_t i = 0; i < group.size(); ++i) {
          if (i > 0) out << ' ';
          out << group[i] + 1;
        }
        out << ')';
      }
    }
    out << '\n';
  }
  for (const auto& p : instance.projects()) {
    out << p.capacity << ' ' << p.lecturer + 1 << '\n';
  }
  for (const auto& l : instance.lecturers()) {
    out << l.upper_quota << ' ' << l.lower_quota << '\n';
  }
  return out.str();
}

Matching parse_matching(std::string_view text, const SpaInstance& instance) {
  Matching matching;
  matching.project_of.assign(
      static_cast<std::size_t>(instance.student_count()), -1);
  for (const auto& line : tokenize(text)) {
    if (line.tokens.empty()) continue;
    if (line.tokens.size() != 2) {
      fail(line.number, "expected 'student project'");
    }
    const int s = parse_int(line, line.tokens[0], "student id");
    const int p = parse_int(line, line.tokens[1], "project id");
    if (s < 1 || s > instance.student_count()) {
      fail(line.number, "student id out of range: " + std::to_string(s));
    }
    if (p < 1 || p > instance.project_count()) {
      fail(line.number, "project id out of range: " + std::to_string(p));
    }
    if (matching.project_of[static_cast<std::size_t>(s - 1)] != -1) {
      fail(line.number, "student " + std::to_string(s) + " assigned twice");
    }
    matching.project_of[static_cast<std::size_t>(s - 1)] = p - 1;
  }
  return matching;
}

std::string write_matching(const SpaInstance& instance, const Matching& matching) {
  const MatchStats stats = matching_stats(instance, matching);
  std::ostringstream out;
  for (int i = 0; i < instance.student_count(); ++i) {
    const int j = matching.project_of[static_cast<std::size_t>(i)];
    if (j >= 0) out << i + 1 << ' ' << j + 1 << '\n';
  }
  out << "# size=" << stats.size << " profile=" << to_string(stats.profile)
      << " cost=" << stats.cost << " degree=" << stats.degree << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << text;
}

SpaInstance load_instance(const std::string& path) {
  return parse_instance(read_text_file(path));
}

}  // namespace spa
