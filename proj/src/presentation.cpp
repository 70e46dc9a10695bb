#include "surjtop/presentation.hpp"

#include <cctype>
#include <utility>

namespace surjtop {

  Presentation::Presentation(Alphabet alphabet, std::vector<FreeWord> relators)
      : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
    if (!alphabet_) {
      throw Error("presentation requires a generator set");
    }
    for (auto const& r : relators_) {
      check_same_alphabet(alphabet_, r.alphabet());
      if (r.is_identity()) {
        throw Error("relator reduces to the identity");
      }
    }
  }

  bool Presentation::operator==(Presentation const& other) const {
    return *alphabet_ == *other.alphabet_ && relators_ == other.relators_;
  }

  std::string_view to_string(DiagnosticKind kind) {
    switch (kind) {
      case DiagnosticKind::unknown_generator:
        return "unknown-generator";
      case DiagnosticKind::duplicate_generator:
        return "duplicate-generator";
      case DiagnosticKind::syntax:
        return "syntax";
      case DiagnosticKind::empty_relator:
        return "empty-relator";
    }
    return "syntax";
  }

  ParseError::ParseError(ParseDiagnostic diagnostic)
      : Error(std::string(to_string(diagnostic.kind)) + " at offset "
              + std::to_string(diagnostic.position) + ": " + diagnostic.message),
        diagnostic_(std::move(diagnostic)) {}

  namespace {

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }

    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    bool is_digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    class Parser {
     public:
      Parser(std::string_view text, std::size_t base)
          : text_(text), base_(base) {}

      Presentation parse() {
        expect('<', "expected '<'");
        auto alphabet = parse_generators();
        expect('|', "expected '|' or ','");
        auto relators = parse_relators(alphabet);
        expect('>', "expected ',' or '>'");
        skip_space();
        if (pos_ != text_.size()) {
          fail(DiagnosticKind::syntax, pos_, "unexpected trailing content");
        }
        return Presentation(std::move(alphabet), std::move(relators));
      }

     private:
      [[noreturn]] void fail(DiagnosticKind kind,
                             std::size_t    at,
                             std::string    message) const {
        throw ParseError(ParseDiagnostic{kind, base_ + at, std::move(message)});
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      void expect(char c, char const* message) {
        if (peek() != c) {
          fail(DiagnosticKind::syntax, pos_, message);
        }
        ++pos_;
      }

      std::string_view identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
          ++pos_;
        }
        return text_.substr(start, pos_ - start);
      }

      Alphabet parse_generators() {
        std::vector<std::string> names;
        while (true) {
          if (!is_ident_start(peek())) {
            fail(DiagnosticKind::syntax, pos_, "expected a generator name");
          }
          std::size_t const at   = pos_;
          auto              name = identifier();
          for (auto const& existing : names) {
            if (existing == name) {
              fail(DiagnosticKind::duplicate_generator, at,
                   "generator '" + std::string(name) + "' declared twice");
            }
          }
          names.emplace_back(name);
          if (peek() != ',') {
            break;
          }
          ++pos_;
        }
        return make_alphabet(std::move(names));
      }

      std::vector<FreeWord> parse_relators(Alphabet const& alphabet) {
        std::vector<FreeWord> relators;
        if (peek() == '>') {
          return relators;
        }
        while (true) {
          relators.push_back(parse_word(alphabet));
          if (peek() != ',') {
            break;
          }
          ++pos_;
        }
        return relators;
      }

      Integer parse_sint() {
        skip_space();
        std::size_t const start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') {
          ++pos_;
        }
        std::size_t const digits = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
          ++pos_;
        }
        if (pos_ == digits) {
          fail(DiagnosticKind::syntax, pos_, "expected an integer exponent");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
      }

      // Returns false when no term starts here.
      bool parse_term(Alphabet const& alphabet, std::vector<Syllable>& out) {
        char const c = peek();
        if (c == '1') {
          ++pos_;
          if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            fail(DiagnosticKind::syntax, pos_, "unexpected character after '1'");
          }
          return true;
        }
        if (!is_ident_start(c)) {
          return false;
        }
        std::size_t const at    = pos_;
        auto              name  = identifier();
        auto              index = alphabet->index_of(name);
        if (!index) {
          fail(DiagnosticKind::unknown_generator, at,
               "undeclared generator '" + std::string(name) + "'");
        }
        Integer exponent = 1;
        if (peek() == '^') {
          ++pos_;
          exponent = parse_sint();
        }
        out.push_back({*index, std::move(exponent)});
        return true;
      }

      FreeWord parse_word(Alphabet const& alphabet) {
        std::size_t const     start = (skip_space(), pos_);
        std::vector<Syllable> raw;
        if (!parse_term(alphabet, raw)) {
          fail(DiagnosticKind::syntax, pos_, "expected a relator word");
        }
        while (true) {
          if (peek() == '*') {
            ++pos_;
            if (!parse_term(alphabet, raw)) {
              fail(DiagnosticKind::syntax, pos_, "expected a term after '*'");
            }
            continue;
          }
          if (!parse_term(alphabet, raw)) {
            break;
          }
        }
        FreeWord word = FreeWord::reduce(alphabet, raw);
        if (word.is_identity()) {
          fail(DiagnosticKind::empty_relator, start,
               "relator reduces to the identity");
        }
        return word;
      }

      std::string_view text_;
      std::size_t      base_;
      std::size_t      pos_ = 0;
    };

    bool is_blank(std::string_view line) {
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }

    bool is_comment(std::string_view line) {
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return c == '#';
        }
      }
      return false;
    }

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    return Parser(text, 0).parse();
  }

  Presentation parse_presentation_document(std::string_view document) {
    std::size_t      offset = 0;
    std::string_view found;
    std::size_t      found_at = 0;
    bool             have     = false;
    while (offset <= document.size()) {
      std::size_t end = document.find('\n', offset);
      if (end == std::string_view::npos) {
        end = document.size();
      }
      std::string_view line = document.substr(offset, end - offset);
      if (!is_blank(line) && !is_comment(line)) {
        if (have) {
          throw ParseError(ParseDiagnostic{DiagnosticKind::syntax, offset,
                                           "unexpected content after the presentation"});
        }
        found    = line;
        found_at = offset;
        have     = true;
      }
      offset = end + 1;
    }
    if (!have) {
      throw ParseError(ParseDiagnostic{DiagnosticKind::syntax, document.size(),
                                       "no presentation found"});
    }
    return Parser(found, found_at).parse();
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "< ";
    auto const& names = p.generators().names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      out += i == 0 ? "" : ", ";
      out += names[i];
    }
    out += " |";
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      out += i == 0 ? " " : ", ";
      out += to_string(p.relators()[i]);
    }
    return out + " >";
  }

  IntMatrix exponent_matrix(Presentation const& p) {
    IntMatrix delta(p.num_relators(), p.num_generators());
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      for (auto const& s : p.relators()[i].syllables()) {
        delta(i, s.generator) += s.exponent;
      }
    }
    return delta;
  }

}  // namespace surjtop
