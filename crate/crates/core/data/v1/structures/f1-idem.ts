structure f1-idem
constants 1 0 −1
generators x
relations
  x^2 = x
end
elements 1 0 −1 x −x
