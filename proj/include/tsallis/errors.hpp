#pragma once

#include <stdexcept>
#include <string>

namespace tsallis {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// PGM decoding
class MalformedHeader : public Error { using Error::Error; };
class UnsupportedMaxval : public Error { using Error::Error; };
class TruncatedData : public Error { using Error::Error; };

class ImageTooSmall : public Error { using Error::Error; };
class InvalidQ : public Error { using Error::Error; };

// No candidate threshold splits the histogram into two nonempty classes.
class DegenerateHistogram : public Error { using Error::Error; };

class InvalidParams : public Error { using Error::Error; };

} // namespace tsallis
