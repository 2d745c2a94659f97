#ifndef WD_ERRORS_HPP
#define WD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace wd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WD_DEFINE_ERROR(Name)                                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

WD_DEFINE_ERROR(ParseError);
WD_DEFINE_ERROR(VariableMismatch);
WD_DEFINE_ERROR(UnsupportedVariable);
WD_DEFINE_ERROR(AlgebraMismatch);
WD_DEFINE_ERROR(InvalidGenerator);
WD_DEFINE_ERROR(NotWeight);
WD_DEFINE_ERROR(ZeroVector);
WD_DEFINE_ERROR(Unsupported);
WD_DEFINE_ERROR(NotApplicable);
WD_DEFINE_ERROR(InvalidSpec);
WD_DEFINE_ERROR(RequiresSimple);

#undef WD_DEFINE_ERROR

// Raised by classify_rank1 when the supplied structure functions violate one
// of the bracket relations; relation() names the violated identity.
class NotAModule : public Error {
public:
    NotAModule(std::string relation, const std::string& detail)
        : Error("NotAModule: relation " + relation + " violated: " + detail),
          relation_(std::move(relation))
    {
    }
    const std::string& relation() const { return relation_; }

private:
    std::string relation_;
};

// Spec document failed validation; pointer() is a JSON pointer to the
// offending location.
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& message)
        : Error("SchemaError at " + (pointer.empty() ? std::string("/") : pointer) + ": " + message),
          pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

} // namespace wd

#endif
