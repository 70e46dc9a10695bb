#ifndef SURJTOP_PRESENTATION_HPP
#define SURJTOP_PRESENTATION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "surjtop/freegroup.hpp"
#include "surjtop/intlinalg.hpp"

namespace surjtop {

  // Finite presentation <x_1, ..., x_n | r_1, ..., r_m>. Relators are reduced
  // and never the identity.
  class Presentation {
   public:
    Presentation(Alphabet alphabet, std::vector<FreeWord> relators);

    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    GeneratorSet const& generators() const noexcept {
      return *alphabet_;
    }
    std::vector<FreeWord> const& relators() const noexcept {
      return relators_;
    }
    std::size_t num_generators() const noexcept {
      return alphabet_->size();
    }
    std::size_t num_relators() const noexcept {
      return relators_.size();
    }

    bool operator==(Presentation const& other) const;

   private:
    Alphabet              alphabet_;
    std::vector<FreeWord> relators_;
  };

  enum class DiagnosticKind { unknown_generator, duplicate_generator, syntax, empty_relator };

  std::string_view to_string(DiagnosticKind kind);

  struct ParseDiagnostic {
    DiagnosticKind kind;
    std::size_t    position;  // byte offset into the parsed text
    std::string    message;
  };

  class ParseError : public Error {
   public:
    explicit ParseError(ParseDiagnostic diagnostic);

    ParseDiagnostic const& diagnostic() const noexcept {
      return diagnostic_;
    }

   private:
    ParseDiagnostic diagnostic_;
  };

  // Parses "< x, y | x^4 y x y >". The first error found is thrown as a
  // ParseError.
  Presentation parse_presentation(std::string_view text);

  // Presentation file contents: '#' comment lines and blank lines are
  // skipped, exactly one presentation line is allowed. Diagnostic positions
  // are offsets into `document`.
  Presentation parse_presentation_document(std::string_view document);

  std::string format_presentation(Presentation const& p);

  // m x n matrix of exponent sums: entry (i, j) is the total exponent of
  // generator j in relator i.
  IntMatrix exponent_matrix(Presentation const& p);

}  // namespace surjtop

#endif  // SURJTOP_PRESENTATION_HPP
