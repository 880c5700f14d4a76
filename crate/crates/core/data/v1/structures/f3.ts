structure f3
constants 1 0 −1
generators x y z
relations
  x^2 = y^2
  x^2z^2 = x^2
  y^2z^2 = x^2
  xz = x
end
elements 1 0 −1 x −x y −y z −z x² −x² z² −z² xy −xy
